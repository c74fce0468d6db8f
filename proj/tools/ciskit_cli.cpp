#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "ciskit/cis.hpp"
#include "ciskit/classification.hpp"
#include "ciskit/constructions.hpp"
#include "ciskit/counting.hpp"
#include "ciskit/error.hpp"
#include "ciskit/io.hpp"
#include "ciskit/permutation.hpp"
#include "ciskit/z4.hpp"

namespace {

using namespace ciskit;

constexpr int kExitUsage = 2;

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << (i ? "," : "") << v[i];
  }
  return out.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

BitVector bits_arg(const std::string& text, const char* name) {
  try {
    return BitVector::from_string(text);
  } catch (const Error&) {
    raise(Errc::Parse, std::string("--") + name + " must be a 0/1 string");
  }
}

struct ConstructArgs {
  std::string kind;
  std::size_t n = 0;
  std::string f;
  unsigned q = 0;
  std::size_t length = 0;
  std::string g;
  std::size_t index = 0;
  std::string base;
  std::string x;
  std::string y;
  unsigned p = 0;
};

void require(bool present, const char* what) {
  if (!present) {
    raise(Errc::InvalidArgument, std::string("missing ") + what);
  }
}

void cmd_construct(const ConstructArgs& a) {
  const std::string& k = a.kind;
  if (k == "double-circulant") {
    require(a.n > 0 && !a.f.empty(), "--n and --f");
    write_code(std::cout, double_circulant(Gf2Poly::from_string(a.f), a.n));
  } else if (k == "paley") {
    require(a.q > 0, "--q");
    write_code(std::cout, paley_cis(a.q));
  } else if (k == "cyclic-shorten") {
    require(a.length > 0 && !a.g.empty(), "--length and --g");
    write_code(std::cout, shorten(cyclic_code(a.length, Gf2Poly::from_string(a.g)), a.index));
  } else if (k == "cyclic-extend") {
    require(a.length > 0 && !a.g.empty(), "--length and --g");
    write_code(std::cout, extend_parity(cyclic_code(a.length, Gf2Poly::from_string(a.g))));
  } else if (k == "buildup") {
    require(!a.base.empty() && !a.x.empty() && !a.y.empty(), "--base, --x and --y");
    const LinearCode base(load_binary_matrix(a.base));
    write_code(std::cout, build_up(base, bits_arg(a.x, "x"), bits_arg(a.y, "y")));
  } else if (k == "z4-qr") {
    require(a.p > 0, "--p");
    write_z4_matrix(std::cout, z4_qr_code(a.p).generator());
  } else if (k == "octacode") {
    write_z4_matrix(std::cout, octacode().generator());
  } else {
    raise(Errc::InvalidArgument, "unknown construction '" + k + "'");
  }
}

void print_cis(const CisDecision& d) {
  if (d.is_cis()) {
    std::cout << "cis=yes left=" << join(d.certificate->left) << " right=" << join(d.certificate->right) << '\n';
  } else {
    std::cout << "cis=no reason=" << reason_name(d.reason) << '\n';
  }
}

void print_systematic(bool cis, std::size_t k) {
  if (!cis) {
    std::cout << "cis=no reason=not-systematic\n";
    return;
  }
  std::vector<std::size_t> left(k);
  std::vector<std::size_t> right(k);
  for (std::size_t i = 0; i < k; ++i) {
    left[i] = i;
    right[i] = k + i;
  }
  std::cout << "cis=yes left=" << join(left) << " right=" << join(right) << '\n';
}

// Z4 files: CIS in Z4 coordinates, distances of the Gray image.
void check_z4(const Z4Matrix& m, const std::string& what, const EnumerationLimits& limits) {
  const Z4FreeCode code = Z4FreeCode::systematize(m);
  if (what == "cis" || what == "cis-systematic") {
    print_systematic(is_free_cis_z4(code), code.dimension());
  } else if (what == "self-dual") {
    std::cout << "self-dual=" << yes_no(is_self_dual(code)) << '\n';
  } else if (what == "fsd") {
    const auto dd = distance_distribution(binary_image(code), limits);
    std::cout << "fsd=" << yes_no(dd.primal == dd.dual) << '\n';
  } else if (what == "distance") {
    std::cout << "distance=" << min_lee_weight(code) << '\n';
  } else if (what == "dual-distance") {
    const auto dd = distance_distribution(binary_image(code), limits);
    std::cout << "dual-distance=" << dd.dual_distance().value_or(0) << '\n';
  } else {
    raise(Errc::InvalidArgument, "unknown check '" + what + "'");
  }
}

void cmd_check(const std::string& path, const std::string& what, const EnumerationLimits& limits) {
  const auto matrix = load_any_matrix(path);
  if (const auto* z4 = std::get_if<Z4Matrix>(&matrix)) {
    check_z4(*z4, what, limits);
    return;
  }
  const LinearCode code(std::get<BitMatrix>(matrix));
  if (what == "cis") {
    print_cis(find_cis_partition(code));
  } else if (what == "cis-systematic") {
    print_systematic(is_cis_systematic(code), code.dimension());
  } else if (what == "self-dual") {
    std::cout << "self-dual=" << yes_no(is_self_dual(code)) << '\n';
  } else if (what == "fsd") {
    std::cout << "fsd=" << yes_no(is_formally_self_dual(code, limits)) << '\n';
  } else if (what == "distance") {
    std::cout << "distance=" << min_distance(code, limits) << '\n';
  } else if (what == "dual-distance") {
    std::cout << "dual-distance=" << dual_distance(code, limits) << '\n';
  } else {
    raise(Errc::InvalidArgument, "unknown check '" + what + "'");
  }
}

void cmd_gci(const std::string& path, const std::string& export_path, const EnumerationLimits& limits) {
  auto matrix = load_any_matrix(path);
  std::optional<PermutationTable> f;
  unsigned dual = 0;
  if (auto* bin = std::get_if<BitMatrix>(&matrix)) {
    const LinearCode code(*bin);
    f.emplace(extract_permutation(code));
    dual = gci_order_dual(code, limits);
  } else {
    Z4Matrix& m = std::get<Z4Matrix>(matrix);
    std::optional<Z4FreeCode> code;
    try {
      code.emplace(m);
    } catch (const Error&) {
      raise(Errc::NotSystematicCis, "Z4 generator is not of the form (I | A)");
    }
    f.emplace(z4_permutation(*code));
    dual = gci_order_dual(*f, limits);
  }
  const GciReport report = gci_order_walsh(*f, limits);
  std::cout << "gci-order=" << report.order << " method=walsh crosscheck=dual-distance agreement="
            << yes_no(report.order == dual) << '\n';
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) {
      raise(Errc::InvalidArgument, "cannot write " + export_path);
    }
    write_sbox(out, *f);
  }
}

void cmd_classify(unsigned length, std::string method, const std::string& out_path, const BuildUpOptions& options) {
  if (length == 0 || length % 2 != 0) {
    raise(Errc::InvalidArgument, "--length must be even and positive");
  }
  const unsigned n = length / 2;
  if (method.empty()) {
    method = n <= 5 ? "exhaustive" : "buildup";
  }
  ClassificationReport report;
  if (method == "exhaustive") {
    report = classify_exhaustive(n);
  } else if (method == "buildup") {
    report = classify_buildup_chain(n, options);
  } else {
    raise(Errc::InvalidArgument, "unknown method '" + method + "'");
  }
  if (report.buildup) {
    for (const auto& s : report.buildup->stages) {
      std::cerr << "stage K=" << s.variants_per_code << " classes=" << s.classes << '\n';
    }
    std::cerr << "candidates=" << report.buildup->candidates << " exhausted=" << yes_no(report.buildup->exhausted)
              << '\n';
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      raise(Errc::InvalidArgument, "cannot write " + out_path);
    }
    write_report(out, report);
  }
  std::cout << "len=" << length << " total=" << report.total();
  for (std::size_t d = 2; d <= 4; ++d) {
    std::cout << " d" << d << '=' << report.count_with_distance(d);
  }
  std::cout << '\n';
}

void cmd_masscheck(unsigned n) {
  if (n == 0 || n > 4) {
    raise(Errc::TooLarge, "masscheck needs 1 <= n <= 4");
  }
  const MassCheck check = mass_check(classify_exhaustive(n));
  std::cout << "gn=" << check.gn << " sum=" << check.sum << " complete=" << yes_no(check.complete()) << '\n';
}

void cmd_bounds(unsigned n, unsigned d) {
  std::cout << "M=" << vg_bound_M(n, d);
  if (n <= 4) {
    std::cout << " B=" << brute_B(n, d);
  }
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, check and classify complementary information set codes"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for long enumerations")->check(CLI::Range(1u, 256u));

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write a generator matrix to standard output");
  construct->add_option("kind", ca.kind, "double-circulant|paley|cyclic-shorten|cyclic-extend|buildup|z4-qr|octacode")
      ->required();
  construct->add_option("--n", ca.n, "Circulant order");
  construct->add_option("--f", ca.f, "Polynomial coefficients, lowest degree first");
  construct->add_option("--q", ca.q, "Paley prime");
  construct->add_option("--length", ca.length, "Cyclic code length N");
  construct->add_option("--g", ca.g, "Generator polynomial, lowest degree first");
  construct->add_option("--index", ca.index, "Coordinate removed by shortening");
  construct->add_option("--base", ca.base, "Base code file");
  construct->add_option("--x", ca.x, "Build-up vector x");
  construct->add_option("--y", ca.y, "Build-up vector y");
  construct->add_option("--p", ca.p, "Prime for the Z4 quadratic residue code");

  std::string file;
  std::string what;
  auto* check = app.add_subcommand("check", "Report a property of a code file");
  check->add_option("file", file)->required();
  check->add_option("what", what, "cis|cis-systematic|self-dual|fsd|distance|dual-distance")->required();

  std::string export_path;
  auto* gci = app.add_subcommand("gci", "Graph correlation immunity order of the induced permutation");
  gci->add_option("file", file)->required();
  gci->add_option("--export", export_path, "Write the permutation as an S-box file");

  unsigned length = 0;
  std::string method;
  std::string out_path;
  BuildUpOptions options;
  auto* classify = app.add_subcommand("classify", "Classify [2n, n] CIS codes up to equivalence");
  classify->add_option("--length", length)->required();
  classify->add_option("--method", method, "exhaustive|buildup");
  classify->add_option("--out", out_path, "Report file");
  classify->add_option("--initial-variants", options.initial_variants, "Build-up variants per code in stage one");
  classify->add_flag("--exhaust", options.exhaust, "Use every build-up variant");

  unsigned n = 0;
  unsigned d = 0;
  auto* masscheck = app.add_subcommand("masscheck", "Mass formula check against |GL(n, 2)|");
  masscheck->add_option("--n", n)->required();
  auto* bounds = app.add_subcommand("bounds", "Counting bound M(n, d) and brute count B(n, d)");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  EnumerationLimits limits;
  try {
    limits = default_limits();
    limits.jobs = jobs;
    if (*construct) {
      cmd_construct(ca);
    } else if (*check) {
      cmd_check(file, what, limits);
    } else if (*gci) {
      cmd_gci(file, export_path, limits);
    } else if (*classify) {
      cmd_classify(length, method, out_path, options);
    } else if (*masscheck) {
      cmd_masscheck(n);
    } else if (*bounds) {
      cmd_bounds(n, d);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
