#include "ciskit/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ciskit/error.hpp"

namespace ciskit {

namespace {

[[noreturn]] void parse_error(const std::string& what) { raise(Errc::Parse, what); }

std::pair<std::size_t, std::size_t> read_header(std::istream& in, std::string_view keyword) {
  std::string word;
  long rows = -1;
  long cols = -1;
  if (!(in >> word) || word != keyword) {
    parse_error("expected header '" + std::string(keyword) + " <rows> <cols>'");
  }
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    parse_error("malformed header dimensions");
  }
  return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols)};
}

BitMatrix read_binary_body(std::istream& in, std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(in >> line)) {
      parse_error("expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
    }
    if (line.size() != cols) {
      parse_error("row " + std::to_string(i) + " has " + std::to_string(line.size()) + " characters, expected " +
                  std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (line[j] == '1') {
        m.set(i, j);
      } else if (line[j] != '0') {
        parse_error("invalid character '" + std::string(1, line[j]) + "' in row " + std::to_string(i));
      }
    }
  }
  return m;
}

Z4Matrix read_z4_body(std::istream& in, std::size_t rows, std::size_t cols) {
  Z4Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      int v = -1;
      if (!(in >> v) || v < 0 || v > 3) {
        parse_error("expected a digit 0..3 at row " + std::to_string(i) + ", column " + std::to_string(j));
      }
      m.set(i, j, static_cast<unsigned>(v));
    }
  }
  return m;
}

void expect_end(std::istream& in) {
  std::string rest;
  if (in >> rest) {
    parse_error("unexpected trailing data '" + rest + "'");
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    parse_error("cannot open " + path);
  }
  return in;
}

}  // namespace

BitMatrix read_binary_matrix(std::istream& in) {
  const auto [rows, cols] = read_header(in, "bin");
  auto m = read_binary_body(in, rows, cols);
  expect_end(in);
  return m;
}

void write_binary_matrix(std::ostream& out, const BitMatrix& m) {
  out << "bin " << m.rows() << ' ' << m.cols() << '\n';
  for (const auto& r : m.to_strings()) {
    out << r << '\n';
  }
}

void write_code(std::ostream& out, const LinearCode& code) { write_binary_matrix(out, code.generator()); }

Z4Matrix read_z4_matrix(std::istream& in) {
  const auto [rows, cols] = read_header(in, "z4");
  auto m = read_z4_body(in, rows, cols);
  expect_end(in);
  return m;
}

void write_z4_matrix(std::ostream& out, const Z4Matrix& m) {
  out << "z4 " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << static_cast<int>(m.get(i, j));
    }
    out << '\n';
  }
}

std::variant<BitMatrix, Z4Matrix> read_any_matrix(std::istream& in) {
  std::string word;
  if (!(in >> word)) {
    parse_error("empty input");
  }
  long rows = -1;
  long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
    parse_error("malformed header dimensions");
  }
  const auto r = static_cast<std::size_t>(rows);
  const auto c = static_cast<std::size_t>(cols);
  if (word == "bin") {
    auto m = read_binary_body(in, r, c);
    expect_end(in);
    return m;
  }
  if (word == "z4") {
    auto m = read_z4_body(in, r, c);
    expect_end(in);
    return m;
  }
  parse_error("unknown header '" + word + "', expected 'bin' or 'z4'");
}

BitMatrix load_binary_matrix(const std::string& path) {
  auto in = open(path);
  return read_binary_matrix(in);
}

std::variant<BitMatrix, Z4Matrix> load_any_matrix(const std::string& path) {
  auto in = open(path);
  return read_any_matrix(in);
}

void write_sbox(std::ostream& out, const PermutationTable& f) {
  out << "n=" << f.variables() << '\n';
  for (auto v : f.table()) {
    out << std::hex << v << std::dec << '\n';
  }
}

PermutationTable read_sbox(std::istream& in) {
  std::string header;
  if (!(in >> header) || header.rfind("n=", 0) != 0) {
    parse_error("expected header 'n=<N>'");
  }
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(std::stoul(header.substr(2)));
  } catch (const std::exception&) {
    parse_error("bad variable count in '" + header + "'");
  }
  if (n > PermutationTable::max_variables) {
    raise(Errc::TooLarge, "S-box has too many variables");
  }
  std::vector<std::uint32_t> table(std::size_t{1} << n);
  for (auto& v : table) {
    std::string token;
    if (!(in >> token) || token.find_first_not_of("0123456789abcdef") != std::string::npos) {
      parse_error("expected a lowercase hex value");
    }
    v = static_cast<std::uint32_t>(std::stoul(token, nullptr, 16));
  }
  expect_end(in);
  return PermutationTable(n, std::move(table));
}

std::string rows_to_hex(const BitMatrix& m) {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t width = (m.cols() + 3) / 4;
  const std::size_t pad = 4 * width - m.cols();
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) {
      out += ',';
    }
    for (std::size_t d = 0; d < width; ++d) {
      unsigned nibble = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        // Bit position counted from the most significant end of the padded value.
        const std::size_t pos = 4 * d + b;
        nibble <<= 1;
        if (pos >= pad && m.get(i, pos - pad)) {
          nibble |= 1;
        }
      }
      out += digits[nibble];
    }
  }
  return out;
}

BitMatrix rows_from_hex(std::string_view text, std::size_t length) {
  const std::size_t width = (length + 3) / 4;
  const std::size_t pad = 4 * width - length;
  std::vector<BitVector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, end - start);
    if (token.size() != width) {
      parse_error("hex row has the wrong width");
    }
    BitVector row(length);
    for (std::size_t d = 0; d < width; ++d) {
      const char ch = token[d];
      unsigned nibble = 0;
      if (ch >= '0' && ch <= '9') {
        nibble = static_cast<unsigned>(ch - '0');
      } else if (ch >= 'a' && ch <= 'f') {
        nibble = static_cast<unsigned>(ch - 'a' + 10);
      } else {
        parse_error("invalid hex digit");
      }
      for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t pos = 4 * d + b;
        if ((nibble >> (3 - b)) & 1u) {
          if (pos < pad) {
            parse_error("padding bits must be zero");
          }
          row.set(pos - pad);
        }
      }
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return BitMatrix::from_rows(std::move(rows));
}

}  // namespace ciskit
