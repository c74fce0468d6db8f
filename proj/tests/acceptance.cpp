// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "ciskit/cis.hpp"
#include "ciskit/classification.hpp"
#include "ciskit/constructions.hpp"
#include "ciskit/counting.hpp"
#include "ciskit/equivalence.hpp"
#include "ciskit/io.hpp"
#include "ciskit/permutation.hpp"
#include "ciskit/z4.hpp"
#include "oracles.hpp"

using namespace ciskit;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Table = std::map<std::size_t, BucketCounts>;

// Class counts per length: d -> (sd, non-sd fsd, non-fsd).
const std::map<unsigned, Table> kTable{
    {1, {{2, {1, 0, 0}}}},
    {2, {{2, {1, 1, 0}}}},
    {3, {{2, {1, 2, 2}}, {3, {0, 1, 0}}}},
    {4, {{2, {1, 9, 12}}, {3, {0, 2, 2}}, {4, {1, 0, 0}}}},
    {5, {{2, {2, 40, 114}}, {3, {0, 9, 26}}, {4, {0, 2, 2}}}},
    {6, {{2, {2, 318, 1779}}, {3, {0, 87, 478}}, {4, {1, 7, 33}}}},
};
const std::map<unsigned, std::size_t> kTotals{{1, 1}, {2, 2}, {3, 6}, {4, 27}, {5, 195}, {6, 2705}};

std::map<unsigned, ClassificationReport> reports;

const ClassificationReport& exhaustive(unsigned n) {
  auto it = reports.find(n);
  if (it == reports.end()) it = reports.emplace(n, classify_exhaustive(n)).first;
  return it->second;
}

std::optional<ClassificationReport> length12;

std::string describe(const Table& t) {
  std::ostringstream s;
  for (const auto& [d, b] : t) s << " d" << d << "=" << b.self_dual << "+" << b.fsd_not_sd << "+" << b.not_fsd;
  return s.str();
}

void check_table(Outcome& o, unsigned n, const ClassificationReport& r) {
  const auto buckets = fsd_sd_buckets(r);
  o.require(r.total() == kTotals.at(n), "total at length " + std::to_string(2 * n));
  o.require(buckets == kTable.at(n), "buckets at length " + std::to_string(2 * n));
  o.detail << " len" << 2 * n << ":" << r.total() << describe(buckets);
}

LinearCode hamming8_cyclic() { return extend_parity(cyclic_code(7, Gf2Poly::from_string("1101"))); }
LinearCode golay_cyclic() { return extend_parity(cyclic_code(23, Gf2Poly::from_string("101011100011"))); }

std::vector<std::size_t> range(std::size_t b, std::size_t e) {
  std::vector<std::size_t> v;
  for (auto i = b; i < e; ++i) v.push_back(i);
  return v;
}

std::vector<const ClassEntry*> all_classified() {
  std::vector<const ClassEntry*> out;
  for (unsigned n = 1; n <= 5; ++n)
    for (const auto& c : exhaustive(n).classes) out.push_back(&c);
  if (length12)
    for (const auto& c : length12->classes) out.push_back(&c);
  return out;
}

void criterion1(Outcome& o) {
  for (unsigned n = 1; n <= 5; ++n) check_table(o, n, exhaustive(n));
}

void criterion2(Outcome& o) {
  length12 = classify_buildup(exhaustive(5));
  check_table(o, 6, *length12);
  const auto& s = *length12->buildup;
  o.detail << " stages:";
  for (const auto& st : s.stages) o.detail << " K=" << st.variants_per_code << "->" << st.classes;
  o.detail << " candidates=" << s.candidates;
}

void criterion3(Outcome& o) {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto b = classify_buildup_chain(n);
    const bool same = b.keys() == exhaustive(n).keys();
    o.require(same, "buildup != exhaustive at n=" + std::to_string(n));
    o.detail << " n=" << n << ":" << b.total() << (same ? "=" : "!=") << exhaustive(n).total();
  }
}

void criterion4(Outcome& o) {
  const std::map<unsigned, int> expected{{2, 6}, {3, 168}, {4, 20160}};
  for (const auto& [n, g] : expected) {
    const auto m = mass_check(exhaustive(n));
    o.require(m.sum == g && m.gn == g && m.complete(), "mass formula at n=" + std::to_string(n));
    o.require(BigInt(oracle::count_invertible(n)) == g, "direct GL count at n=" + std::to_string(n));
    o.detail << " n=" << n << ":sum=" << m.sum << "/g=" << m.gn;
  }
}

void criterion5(Outcome& o) {
  const LinearCode base(BitMatrix::from_strings({"100011", "010101", "001111"}));
  o.require(min_distance(base) == 3, "base is [6,3,3]");
  const auto x = BitVector::from_string("110");
  const auto y = BitVector::from_string("110");
  const auto mult = build_up_multipliers({*base.right_block(), x, y});
  o.require(mult.c.to_string() == "110", "c = (1,1,0)");
  o.require(mult.z, "z = 1");
  const auto g1 = build_up(base, x, y);
  o.require(g1.generator().to_strings() == std::vector<std::string>{"10001110", "01001011", "00101101", "00010111"},
            "expected [8,4,4] generator");
  const auto h = hamming8_cyclic();
  o.require(oracle::equivalent(oracle::pack(g1.generator()), oracle::pack(h.generator()), 8),
            "equivalent to extended Hamming (brute force)");
  o.require(are_equivalent(g1, h), "equivalent to extended Hamming (canonical form)");
  o.detail << " z=" << mult.z << " d=" << min_distance(g1);
}

void criterion6(Outcome& o) {
  const auto code = octacode();
  const auto image = binary_image(code);
  const auto dd = distance_distribution(image);
  o.require(image.size() == 256 && image.length() == 16, "256 words of length 16");
  o.require(dd.min_distance() == 6u, "minimum distance 6");
  o.require(dd.dual_distance() == 6u, "dual distance 6");
  const auto f = z4_permutation(code);
  std::vector<bool> hit(f.size(), false);
  for (std::uint32_t v = 0; v < f.size(); ++v) hit[f(v)] = true;
  o.require(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }), "F bijective");
  const auto report = gci_order_walsh(f);
  o.require(report.order == 6, "Walsh GCI order 6");
  o.require(gci_order_dual(f) == 6, "dual-distance GCI order 6");
  o.require(report.order > 5, "exceeds 5");
  o.detail << " words=" << image.size() << " d=" << *dd.min_distance() << " dual=" << *dd.dual_distance()
           << " gci=" << report.order;
}

void criterion7(Outcome& o) {
  const auto dc = double_circulant(Gf2Poly::from_string("110101011010000"), 15);
  o.require(dc.length() == 30 && is_cis_systematic(dc) && min_distance(dc) == 8, "[30,15,8] double circulant");

  const auto golay = golay_cyclic();
  o.require(min_distance(golay) == 8 && is_self_dual(golay), "[24,12,8] self-dual");
  o.require(find_cis_partition(golay).is_cis(), "Golay CIS");

  const LinearCode six(BitMatrix::from_strings({"100011", "010101", "001111"}));
  o.require(find_cis_partition(six).is_cis() && min_distance(six) == 3, "length-6 code CIS with d=3");

  const LinearCode c34(load_binary_matrix(oracle::data_path("len34.txt")));
  const auto left = range(13, 30);
  std::vector<std::size_t> right = range(0, 13);
  for (std::size_t i = 30; i < 34; ++i) right.push_back(i);
  o.require(min_distance(c34) == 8, "length-34 d=8");
  o.require(is_information_set(c34, left) && is_information_set(c34, right), "given partition");
  o.require(oracle::information_set(oracle::pack(c34.generator()), left), "given L (span oracle)");
  const auto decision = find_cis_partition(c34);
  o.require(decision.is_cis(), "CIS certificate");
  o.detail << " d30=" << min_distance(dc) << " d24=" << min_distance(golay) << " d6=" << min_distance(six)
           << " d34=" << min_distance(c34) << " sys34=" << (is_cis_systematic(c34) ? "yes" : "no");
}

void criterion8(Outcome& o) {
  std::mt19937_64 rng(0x8a11);
  std::size_t random_checked = 0;
  for (unsigned n = 3; n <= 5; ++n) {
    for (int t = 0; t < 200; ++t) {
      std::vector<std::uint32_t> table(1u << n);
      std::iota(table.begin(), table.end(), 0u);
      std::shuffle(table.begin(), table.end(), rng);
      const PermutationTable f(n, table);
      o.require(gci_order_walsh(f).order == gci_order_dual(f), "random bijection n=" + std::to_string(n));
      ++random_checked;
    }
  }
  std::size_t linear_checked = 0;
  for (const auto* c : all_classified()) {
    const auto f = extract_permutation(c->representative);
    o.require(gci_order_walsh(f).order == gci_order_dual(f), "linear F from a classified code");
    ++linear_checked;
  }
  o.detail << " random=" << random_checked << " linear=" << linear_checked;
}

void criterion9(Outcome& o) {
  std::size_t pairs = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned d = 2; d <= 2 * n; ++d) {
      o.require(brute_B(n, d) <= vg_bound_M(n, d), "B <= M at n=" + std::to_string(n) + " d=" + std::to_string(d));
      ++pairs;
    }
  }
  std::size_t identities = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned j = 0; j <= 2 * n; ++j) {
      BigInt sum = 0;
      for (unsigned t = 0; t <= j; ++t) sum += binomial(n, t) * binomial(n, j - t);
      o.require(chu_vandermonde_holds(n, j) && sum == binomial(2 * n, j), "Chu-Vandermonde");
      ++identities;
    }
  }
  o.detail << " bound-pairs=" << pairs << " identities=" << identities;
}

void criterion10(Outcome& o) {
  const auto codes = all_classified();
  std::size_t macwilliams = 0;
  std::size_t dual_cis = 0;
  for (const auto* c : codes) {
    const auto& code = c->representative;
    const auto dd = distance_distribution(code);
    const std::size_t n = code.length();
    const Rational dual_size = Rational(BigInt(1) << n) / dd.size;
    const bool involution = macwilliams_transform(dd.dual, n, dual_size) == dd.primal;
    std::vector<Rational> dual_weights;
    for (auto v : weight_distribution(dual_code(code)).counts) dual_weights.emplace_back(v);
    o.require(involution && dd.dual == dual_weights, "MacWilliams");
    macwilliams += involution;
    const bool cis = find_cis_partition(dual_code(code)).is_cis();
    o.require(cis, "dual of a CIS code is CIS");
    dual_cis += cis;
  }

  std::size_t circulants = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto xn1 = Gf2Poly::x_pow_minus_one(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const auto row = BitVector::from_word(bits, n);
      const bool full = rank(circulant(row)) == n;
      o.require(full == (poly_gcd(Gf2Poly(row), xn1) == Gf2Poly::one()), "circulant rank vs gcd");
      ++circulants;
    }
  }

  std::mt19937_64 rng(0x10);
  std::size_t perms = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& c : exhaustive(n).classes) {
      for (int t = 0; t < 100; ++t) {
        const auto p = oracle::random_permutation(2 * n, rng);
        o.require(canonical_form(permute_columns(c.representative, p)).key == c.key, "canonical invariance");
        ++perms;
      }
    }
  }
  o.detail << " codes=" << codes.size() << " macwilliams=" << macwilliams << " dual-cis=" << dual_cis
           << " circulants=" << circulants << " permutations=" << perms;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"class counts, lengths 2-10 (exhaustive)", criterion1},
      {"class counts, length 12 (build-up)", criterion2},
      {"build-up equals exhaustive, n=2..5", criterion3},
      {"mass formula, n=2,3,4", criterion4},
      {"building-up worked example [6,3,3] -> [8,4,4]", criterion5},
      {"octacode pipeline, GCI order 6", criterion6},
      {"record-distance spot checks", criterion7},
      {"Walsh and dual-distance GCI orders agree", criterion8},
      {"counting bound B <= M and Chu-Vandermonde", criterion9},
      {"property suites", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " |"
              << o.detail.str() << " (" << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
