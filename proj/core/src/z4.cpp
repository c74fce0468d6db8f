#include "ciskit/z4.hpp"

#include <algorithm>
#include <limits>

#include "ciskit/constructions.hpp"
#include "ciskit/error.hpp"

namespace ciskit {

namespace {

constexpr unsigned kMaxImageDimension = 12;

std::uint8_t mod4(long v) { return static_cast<std::uint8_t>(((v % 4) + 4) % 4); }

/// Next message in Z4^k counting order; false after the last one.
bool next_message(Z4Vector& u) {
  for (auto& s : u) {
    if (++s < 4) {
      return true;
    }
    s = 0;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Z4Matrix and the Gray map

Z4Matrix Z4Matrix::from_rows(const std::vector<Z4Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Z4Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      raise(Errc::DimensionMismatch, "Z4 rows have different lengths");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] > 3) {
        raise(Errc::InvalidArgument, "Z4 entries must lie in 0..3");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

BitMatrix Z4Matrix::reduce_mod2() const {
  BitMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m.set(i, j, get(i, j) & 1u);
    }
  }
  return m;
}

BitVector gray(std::span<const std::uint8_t> v) {
  BitVector out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const unsigned s = v[i] & 3u;
    out.set(2 * i, s >= 2);
    out.set(2 * i + 1, s == 1 || s == 2);
  }
  return out;
}

Z4Vector gray_inverse(const BitVector& bits) {
  if (bits.size() % 2 != 0) {
    raise(Errc::WrongSize, "Gray preimage needs an even number of bits");
  }
  static constexpr std::uint8_t table[4] = {0, 1, 3, 2};  // index = b0 * 2 + b1
  Z4Vector out(bits.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = table[(bits.get(2 * i) ? 2 : 0) + (bits.get(2 * i + 1) ? 1 : 0)];
  }
  return out;
}

std::size_t lee_weight(std::span<const std::uint8_t> v) {
  std::size_t w = 0;
  for (auto s : v) {
    const unsigned x = s & 3u;
    w += std::min(x, 4 - x) % 4;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Z4Poly

Z4Poly::Z4Poly(Z4Vector coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) {
    c &= 3u;
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Z4Poly Z4Poly::x_pow_minus_one(std::size_t n) {
  Z4Vector c(n + 1, 0);
  c[0] = 3;
  c[n] = static_cast<std::uint8_t>(c[n] + 1);
  return Z4Poly(std::move(c));
}

Gf2Poly Z4Poly::reduce_mod2() const {
  BitVector c(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c.set(i, coeffs_[i] & 1u);
  }
  return Gf2Poly(std::move(c));
}

std::string Z4Poly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const unsigned c = coeffs_[i];
    if (c == 0) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    if (c != 1 || i == 0) {
      out += std::to_string(c);
    }
    if (i >= 1) {
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  Z4Vector c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = static_cast<std::uint8_t>((c[i + j] + a.coeffs_[i] * b.coeffs_[j]) & 3u);
    }
  }
  return Z4Poly(std::move(c));
}

std::pair<Z4Poly, Z4Poly> z4_divmod(const Z4Poly& a, const Z4Poly& b) {
  if (b.is_zero() || b.coefficients().back() % 2 == 0) {
    raise(Errc::InvalidArgument, "Z4 division needs a unit leading coefficient");
  }
  const std::size_t db = b.degree();
  const unsigned inv = b.coefficients().back();  // 1 and 3 are self-inverse mod 4
  Z4Vector rem = a.coefficients();
  if (rem.size() <= db) {
    return {Z4Poly{}, a};
  }
  Z4Vector quo(rem.size() - db, 0);
  for (std::size_t top = rem.size(); top-- > db;) {
    const unsigned lead = (rem[top] * inv) & 3u;
    if (lead == 0) {
      continue;
    }
    const std::size_t shift = top - db;
    quo[shift] = static_cast<std::uint8_t>(lead);
    for (std::size_t j = 0; j <= db; ++j) {
      rem[j + shift] = mod4(static_cast<long>(rem[j + shift]) - static_cast<long>(lead * b.coefficient(j)));
    }
  }
  return {Z4Poly(std::move(quo)), Z4Poly(std::move(rem))};
}

Z4Poly hensel_lift(const Gf2Poly& f2, std::size_t n) {
  if (n % 2 == 0 || f2.is_zero() || !poly_divmod(Gf2Poly::x_pow_minus_one(n), f2).second.is_zero()) {
    raise(Errc::NotDivisor, "f2 must divide x^N - 1 for odd N");
  }
  // f2(x) = e(x^2) + x o(x^2), lifted with 0/1 integer coefficients.
  const std::size_t deg = *f2.degree();
  Z4Vector e(deg / 2 + 1, 0);
  Z4Vector o(deg / 2 + 1, 0);
  for (std::size_t i = 0; i <= deg; ++i) {
    if (f2.coefficient(i)) {
      (i % 2 == 0 ? e : o)[i / 2] = 1;
    }
  }
  const Z4Poly ep(e);
  const Z4Poly op(o);
  const Z4Poly e2 = ep * ep;
  const Z4Poly yo2 = Z4Poly({0, 1}) * (op * op);
  Z4Vector g(deg + 1, 0);
  const long sign = deg % 2 == 0 ? 1 : -1;
  for (std::size_t i = 0; i <= deg; ++i) {
    g[i] = mod4(sign * (static_cast<long>(e2.coefficient(i)) - static_cast<long>(yo2.coefficient(i))));
  }
  Z4Poly f4(std::move(g));
  if (f4.degree() != deg || f4.coefficients().back() != 1 ||
      !z4_divmod(Z4Poly::x_pow_minus_one(n), f4).second.is_zero()) {
    raise(Errc::NotDivisor, "Graeffe lift does not divide x^N - 1 over Z4");
  }
  return f4;
}

// ---------------------------------------------------------------------------
// Free codes

Z4FreeCode::Z4FreeCode(Z4Matrix generator) : generator_(std::move(generator)) {
  const std::size_t k = generator_.rows();
  if (generator_.cols() < k) {
    raise(Errc::InvalidArgument, "generator has more rows than columns");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (generator_.get(i, j) != (i == j ? 1 : 0)) {
        raise(Errc::InvalidArgument, "generator is not of the form (I | A)");
      }
    }
  }
}

Z4FreeCode Z4FreeCode::systematize(const Z4Matrix& generator) {
  Z4Matrix m = generator;
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (n < k) {
    raise(Errc::NotFree, "more rows than columns");
  }
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m.get(pivot, col) % 2 == 0) {
      ++pivot;
    }
    if (pivot == k) {
      raise(Errc::NotFree, "no unit pivot in leading column " + std::to_string(col));
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto t = m.get(pivot, j);
        m.set(pivot, j, m.get(col, j));
        m.set(col, j, t);
      }
    }
    const unsigned inv = m.get(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m.set(col, j, m.get(col, j) * inv);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const unsigned f = m.get(i, col);
      if (i == col || f == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        m.set(i, j, mod4(static_cast<long>(m.get(i, j)) - static_cast<long>(f * m.get(col, j))));
      }
    }
  }
  return Z4FreeCode(std::move(m));
}

Z4FreeCode Z4FreeCode::from_block(const Z4Matrix& a) {
  const std::size_t k = a.rows();
  Z4Matrix g(k, k + a.cols());
  for (std::size_t i = 0; i < k; ++i) {
    g.set(i, i, 1);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      g.set(i, k + j, a.get(i, j));
    }
  }
  return Z4FreeCode(std::move(g));
}

Z4Matrix Z4FreeCode::right_block() const {
  const std::size_t k = dimension();
  Z4Matrix a(k, length() - k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      a.set(i, j, generator_.get(i, k + j));
    }
  }
  return a;
}

Z4Vector Z4FreeCode::encode(std::span<const std::uint8_t> message) const {
  if (message.size() != dimension()) {
    raise(Errc::DimensionMismatch, "message length must equal the dimension");
  }
  Z4Vector out(length(), 0);
  for (std::size_t i = 0; i < message.size(); ++i) {
    const unsigned u = message[i] & 3u;
    if (u == 0) {
      continue;
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = static_cast<std::uint8_t>((out[j] + u * generator_.get(i, j)) & 3u);
    }
  }
  return out;
}

bool is_self_dual(const Z4FreeCode& code) {
  if (2 * code.dimension() != code.length()) {
    return false;
  }
  const auto& g = code.generator();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = i; j < g.rows(); ++j) {
      unsigned s = 0;
      for (std::size_t t = 0; t < g.cols(); ++t) {
        s += g.get(i, t) * g.get(j, t);
      }
      if (s % 4 != 0) {
        return false;
      }
    }
  }
  return true;
}

UnrestrictedCode binary_image(const Z4FreeCode& code) {
  if (code.dimension() > kMaxImageDimension) {
    raise(Errc::TooLarge, "binary image enumeration limited to 4^12 codewords");
  }
  std::vector<BitVector> words;
  words.reserve(std::size_t{1} << (2 * code.dimension()));
  Z4Vector u(code.dimension(), 0);
  do {
    words.push_back(gray(code.encode(u)));
  } while (next_message(u));
  return UnrestrictedCode(2 * code.length(), std::move(words));
}

std::size_t min_lee_weight(const Z4FreeCode& code) {
  if (code.dimension() > kMaxImageDimension) {
    raise(Errc::TooLarge, "Lee weight enumeration limited to 4^12 codewords");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Z4Vector u(code.dimension(), 0);
  while (next_message(u)) {
    best = std::min(best, lee_weight(code.encode(u)));
  }
  return best;
}

Z4FreeCode z4_qr_code(unsigned p) {
  if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7)) {
    raise(Errc::BadPrime, "p must be a prime congruent to +-1 mod 8");
  }
  std::vector<bool> residue(p, false);
  for (unsigned long x = 1; x < p; ++x) {
    residue[(x * x) % p] = true;
  }
  BitVector eq(p);
  BitVector en(p);
  for (unsigned r = 1; r < p; ++r) {
    (residue[r] ? eq : en).set(r);
  }
  // gcd(e, x^p - 1) for an idempotent e is the generator of the code it spans.
  const Gf2Poly xp = Gf2Poly::x_pow_minus_one(p);
  const Gf2Poly one = Gf2Poly::one();
  std::optional<Gf2Poly> g2;
  for (const Gf2Poly& e : {Gf2Poly(eq), Gf2Poly(en), one + Gf2Poly(eq), one + Gf2Poly(en)}) {
    Gf2Poly g = poly_gcd(e, xp);
    if (g.degree() == std::size_t{(p - 1) / 2}) {
      g2 = std::move(g);
      break;
    }
  }
  if (!g2) {
    raise(Errc::BadPrime, "no quadratic residue generator found");
  }
  const Z4Poly g4 = hensel_lift(*g2, p);
  const std::size_t k = (p + 1) / 2;
  for (const int sign : {-1, 1}) {
    Z4Matrix m(k, p + 1);
    for (std::size_t i = 0; i < k; ++i) {
      long sum = 0;
      for (std::size_t j = 0; j <= g4.degree(); ++j) {
        m.set(i, i + j, g4.coefficient(j));
        sum += g4.coefficient(j);
      }
      m.set(i, p, mod4(sign * sum));
    }
    Z4FreeCode code = Z4FreeCode::systematize(m);
    if (is_self_dual(code) || sign == 1) {
      return code;
    }
  }
  raise(Errc::BadPrime, "unreachable");
}

Z4FreeCode octacode() { return z4_qr_code(7); }

bool is_free_cis_z4(const Z4FreeCode& code) {
  if (code.length() != 2 * code.dimension()) {
    return false;
  }
  return determinant_nonzero(code.right_block().reduce_mod2());
}

PermutationTable z4_permutation(const Z4FreeCode& code) {
  if (!is_free_cis_z4(code)) {
    raise(Errc::NotFree, "A is not invertible over Z4");
  }
  const std::size_t k = code.dimension();
  if (2 * k > PermutationTable::max_variables) {
    raise(Errc::TooLarge, "permutation tables support at most 20 variables");
  }
  const Z4Matrix a = code.right_block();
  std::vector<std::uint32_t> table(std::size_t{1} << (2 * k));
  Z4Vector u(k, 0);
  Z4Vector v(k);
  do {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        v[j] = static_cast<std::uint8_t>((v[j] + u[i] * a.get(i, j)) & 3u);
      }
    }
    table[gray(u).to_word()] = static_cast<std::uint32_t>(gray(v).to_word());
  } while (next_message(u));
  return PermutationTable(static_cast<unsigned>(2 * k), std::move(table));
}

}  // namespace ciskit
