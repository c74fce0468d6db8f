#include <gtest/gtest.h>

#include <random>

#include "ciskit/constructions.hpp"
#include "ciskit/equivalence.hpp"
#include "ciskit/error.hpp"
#include "ciskit/io.hpp"
#include "ciskit/linear_code.hpp"
#include "oracles.hpp"

using namespace ciskit;

namespace {

LinearCode hamming8() { return LinearCode(BitMatrix::from_strings({"10001110", "01001011", "00101101", "00010111"})); }
LinearCode repetition2() { return LinearCode(BitMatrix::from_strings({"11"})); }
LinearCode golay24() { return LinearCode(load_binary_matrix(oracle::data_path("golay24.txt"))); }

std::vector<Rational> as_rational(const WeightDistribution& w) {
  std::vector<Rational> out;
  for (auto c : w.counts) {
    out.emplace_back(c);
  }
  return out;
}

}  // namespace

TEST(LinearCode, RejectsRankDeficientGenerator) {
  try {
    LinearCode(BitMatrix::from_strings({"1100", "1100"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFullRank);
  }
  EXPECT_EQ(LinearCode::span_of(BitMatrix::from_strings({"1100", "1100", "0011"})).dimension(), 2u);
}

TEST(LinearCode, SystematicFormCached) {
  const auto c = hamming8();
  ASSERT_TRUE(c.systematic_form().has_value());
  EXPECT_EQ(c.right_block()->to_strings(), (std::vector<std::string>{"1110", "1011", "1101", "0111"}));
  const LinearCode shifted(BitMatrix::from_strings({"0110", "0011"}));
  EXPECT_FALSE(shifted.systematic_form().has_value());
}

TEST(MinDistance, Examples) {
  EXPECT_EQ(min_distance(repetition2()), 2u);
  EXPECT_EQ(min_distance(hamming8()), 4u);
  EXPECT_EQ(min_distance(golay24()), 8u);
}

TEST(MinDistance, RespectsCap) {
  EnumerationLimits limits;
  limits.max_dimension = 10;
  try {
    min_distance(golay24(), limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(WeightDistribution, Examples) {
  EXPECT_EQ(weight_distribution(repetition2()).counts, (std::vector<std::uint64_t>{1, 0, 1}));
  const auto w = weight_distribution(hamming8());
  EXPECT_EQ(w.counts, oracle::weight_distribution(oracle::pack(hamming8().generator()), 8));
  EXPECT_EQ(w.counts[4], 14u);
  EXPECT_EQ(w.counts[8], 1u);
}

TEST(WeightDistribution, MatchesOracleAndPartitionsMerge) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const std::size_t k = 1 + rng() % 8;
    const std::size_t n = k + rng() % 8;
    auto m = oracle::random_matrix(k, n, rng);
    if (oracle::rank(m) != k) {
      continue;
    }
    const LinearCode c(m);
    const auto expected = oracle::weight_distribution(oracle::pack(m), n);
    EXPECT_EQ(weight_distribution(c).counts, expected);
    EXPECT_EQ(min_distance(c), oracle::min_distance(oracle::pack(m)));
    EXPECT_EQ(weight_distribution(c).min_nonzero_weight(), min_distance(c));

    const std::uint64_t total = std::uint64_t{1} << k;
    const std::uint64_t cut = rng() % (total + 1);
    auto merged = weight_distribution_range(c, 0, cut);
    merged.merge(weight_distribution_range(c, cut, total));
    EXPECT_EQ(merged.counts, expected);

    EnumerationLimits threaded;
    threaded.jobs = 3;
    EXPECT_EQ(weight_distribution(c, threaded).counts, expected);
    EXPECT_EQ(min_distance(c, threaded), min_distance(c));
  }
}

TEST(WideCodes, EnumerationBeyondOneWord) {
  // length 80 > 64 exercises the multi-word walk
  std::mt19937_64 rng(12);
  auto m = oracle::random_matrix(6, 80, rng);
  for (std::size_t i = 0; i < 6; ++i) {
    m.set(i, i);
    for (std::size_t j = 0; j < 6; ++j) {
      if (j != i) m.set(i, j, false);
    }
  }
  const LinearCode c(m);
  std::vector<std::uint64_t> expected(81, 0);
  for (std::uint64_t msg = 0; msg < 64; ++msg) {
    BitVector v(6);
    for (std::size_t i = 0; i < 6; ++i) v.set(i, (msg >> i) & 1u);
    ++expected[c.encode(v).weight()];
  }
  EXPECT_EQ(weight_distribution(c).counts, expected);
}

TEST(DualCode, Examples) {
  EXPECT_EQ(dual_code(repetition2()), repetition2());
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto a = oracle::random_matrix(5, 5, rng);
    const auto c = LinearCode::systematic(a);
    const auto d = dual_code(c);
    EXPECT_EQ(d.dimension(), 5u);
    // span(A^T | I)
    const LinearCode expected(a.transpose().hconcat(BitMatrix::identity(5)));
    EXPECT_EQ(d, expected);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        EXPECT_FALSE(c.generator().row(i).dot(d.generator().row(j)));
      }
    }
  }
}

TEST(DualDistance, Examples) {
  EXPECT_EQ(dual_distance(repetition2()), 2u);
  EXPECT_EQ(dual_distance(hamming8()), 4u);
  const auto u = UnrestrictedCode::from_linear(hamming8());
  EXPECT_EQ(dual_distance(u), 4u);
}

TEST(DistanceDistribution, LinearMatchesDualWeights) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 30; ++t) {
    const std::size_t k = 1 + rng() % 6;
    const std::size_t n = k + 1 + rng() % 6;
    auto m = oracle::random_matrix(k, n, rng);
    if (oracle::rank(m) != k) continue;
    const LinearCode c(m);
    const auto dd = distance_distribution(c);
    const auto dual_weights = as_rational(weight_distribution(dual_code(c)));
    EXPECT_EQ(dd.dual, dual_weights);
    // All-pairs count over the explicit word list agrees.
    const auto pairs = distance_distribution(UnrestrictedCode::from_linear(c));
    EXPECT_EQ(pairs.primal, dd.primal);
    EXPECT_EQ(pairs.dual, dd.dual);
  }
}

TEST(MacWilliams, Involution) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 20; ++t) {
    // Nonlinear: random word sets.
    const std::size_t n = 3 + rng() % 5;
    std::set<std::uint64_t> words{0};
    const std::size_t size = 1 + rng() % std::min<std::size_t>(12, std::size_t{1} << n);
    while (words.size() < size) words.insert(rng() % (1u << n));
    std::vector<BitVector> list;
    for (auto w : words) list.push_back(BitVector::from_word(w, n));
    const UnrestrictedCode u(n, list);
    const auto dd = distance_distribution(u);
    const Rational dual_size = Rational(BigInt(1) << n) / dd.size;
    EXPECT_EQ(macwilliams_transform(dd.dual, n, dual_size), dd.primal);
    EXPECT_TRUE(dd.dual_nonnegative());
    Rational sum = 0;
    for (const auto& b : dd.primal) sum += b;
    EXPECT_EQ(sum, dd.size);
    EXPECT_EQ(dd.primal[0], 1);
  }
}

TEST(Krawtchouk, SmallValues) {
  // K_j(0) = C(n, j); K_1(i) = n - 2i
  for (unsigned n = 1; n <= 8; ++n) {
    for (unsigned j = 0; j <= n; ++j) EXPECT_EQ(krawtchouk(n, j, 0), binomial(n, j));
    for (unsigned i = 0; i <= n; ++i) EXPECT_EQ(krawtchouk(n, 1, i), BigInt(int(n) - 2 * int(i)));
  }
}

TEST(UnrestrictedCode, RejectsDuplicates) {
  std::vector<BitVector> w{BitVector::from_string("01"), BitVector::from_string("01")};
  EXPECT_THROW(UnrestrictedCode(2, w), Error);
}

TEST(Duality, SelfDualAndFsd) {
  EXPECT_TRUE(is_self_dual(golay24()));
  EXPECT_TRUE(is_formally_self_dual(golay24()));
  EXPECT_TRUE(is_self_dual(hamming8()));
  EXPECT_TRUE(is_even_fsd(hamming8()));
  const LinearCode six(BitMatrix::from_strings({"100011", "010101", "001111"}));
  EXPECT_FALSE(is_self_dual(six));
  // Oracle: weight distribution of the dual equals that of the code.
  EXPECT_EQ(is_formally_self_dual(six), weight_distribution(six) == weight_distribution(dual_code(six)));
}

TEST(Duality, SelfDualImpliesFsdOnRandomSystematic) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    const auto c = LinearCode::systematic(oracle::random_matrix(4, 4, rng));
    const bool fsd = weight_distribution(c) == weight_distribution(dual_code(c));
    EXPECT_EQ(is_formally_self_dual(c), fsd);
    if (is_self_dual(c)) EXPECT_TRUE(fsd);
  }
}

TEST(Equivalence, Examples) {
  // T1 lower, T2 upper unitriangular: equivalent codes.
  const auto t1 = LinearCode::systematic(BitMatrix::from_strings({"10", "11"}));
  const auto t2 = LinearCode::systematic(BitMatrix::from_strings({"11", "01"}));
  EXPECT_TRUE(are_equivalent(t1, t2));
  const auto id = LinearCode::systematic(BitMatrix::identity(2));
  EXPECT_FALSE(are_equivalent(t1, id));
  EXPECT_TRUE(is_isodual(hamming8()));
}

TEST(Equivalence, CanonicalFormAgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  std::vector<LinearCode> codes;
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 2 + rng() % 2;
    auto m = oracle::random_matrix(k, 6, rng);
    if (oracle::rank(m) == k) codes.emplace_back(m);
  }
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i; j < codes.size(); ++j) {
      if (codes[i].dimension() != codes[j].dimension()) continue;
      const bool brute =
          oracle::equivalent(oracle::pack(codes[i].generator()), oracle::pack(codes[j].generator()), 6);
      EXPECT_EQ(are_equivalent(codes[i], codes[j]), brute) << i << "," << j;
    }
  }
}

TEST(Equivalence, CanonicalFormPermutationInvariance) {
  std::mt19937_64 rng(18);
  const std::vector<LinearCode> codes{golay24(), hamming8(), LinearCode(load_binary_matrix(oracle::data_path("len34.txt")))};
  for (const auto& c : codes) {
    const auto form = canonical_form(c);
    // The certificate permutation carries the input onto the canonical code.
    EXPECT_EQ(LinearCode(form.generator), LinearCode(permute_columns(c, form.permutation).generator()));
    for (int t = 0; t < 100; ++t) {
      const auto p = oracle::random_permutation(c.length(), rng);
      EXPECT_EQ(canonical_form(permute_columns(c, p)).key, form.key);
    }
  }
}

TEST(Equivalence, CapsEnforced) {
  EXPECT_THROW(canonical_form(LinearCode::systematic(BitMatrix::identity(21))), Error);
}
