#include <gtest/gtest.h>

#include <random>

#include "ciskit/bit_matrix.hpp"
#include "ciskit/error.hpp"
#include "ciskit/gf2_poly.hpp"
#include "oracles.hpp"

using namespace ciskit;

namespace {

const char* kDc15 = "110101011010000";  // x^10+x^8+x^7+x^5+x^3+x+1, lowest first

}  // namespace

TEST(BitVector, WeightAndPadding) {
  auto v = BitVector::from_string("1011001");
  EXPECT_EQ(v.size(), 7u);
  EXPECT_EQ(v.weight(), 4u);
  EXPECT_EQ(v.to_string(), "1011001");
  EXPECT_EQ(v.first_set(), 0u);
  auto w = BitVector::ones(70);
  EXPECT_EQ(w.weight(), 70u);
  EXPECT_EQ(w.words()[1] >> 6, 0u);
  EXPECT_THROW(BitVector::from_string("10x"), Error);
}

TEST(BitVector, XorAndDot) {
  auto a = BitVector::from_string("1100");
  auto b = BitVector::from_string("1010");
  EXPECT_EQ((a ^ b).to_string(), "0110");
  EXPECT_EQ((a & b).to_string(), "1000");
  EXPECT_TRUE(a.dot(b));
  EXPECT_THROW(a ^= BitVector(3), Error);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(BitMatrix::identity(5)), 5u);
  EXPECT_EQ(rank(BitMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(circulant(BitVector::from_string(kDc15))), 15u);
}

TEST(Rank, MatchesSpanOracle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_matrix(1 + rng() % 8, 1 + rng() % 12, rng);
    EXPECT_EQ(rank(m), oracle::rank(m));
  }
}

TEST(Rref, Examples) {
  const auto id = rref(BitMatrix::identity(4));
  EXPECT_EQ(id.reduced, BitMatrix::identity(4));
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));

  const auto dup = rref(BitMatrix::from_strings({"1011", "1011", "0110"}));
  EXPECT_EQ(dup.rank(), 2u);
  EXPECT_TRUE(dup.reduced.row(2).is_zero());

  const auto six = rref(BitMatrix::from_strings({"100011", "010101", "001111"}));
  EXPECT_EQ(six.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const auto m = oracle::random_matrix(1 + rng() % 7, 1 + rng() % 10, rng);
    const auto e = rref(m);
    EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
    EXPECT_EQ(oracle::span(oracle::pack(m)), oracle::span(oracle::pack(e.reduced)));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(BitMatrix::identity(6)), BitMatrix::identity(6));
  EXPECT_EQ(invert(BitMatrix::from_strings({"01", "11"})), BitMatrix::from_strings({"11", "10"}));
  try {
    invert(BitMatrix::from_strings({"10", "10"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Singular);
  }
}

TEST(Invert, AgreesWithRankAndDeterminant) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = oracle::random_matrix(n, n, rng);
    const bool full = oracle::rank(m) == n;
    EXPECT_EQ(determinant_nonzero(m), full);
    if (full) {
      EXPECT_EQ(mat_mul(m, invert(m)), BitMatrix::identity(n));
      EXPECT_EQ(mat_mul(invert(m), m), BitMatrix::identity(n));
    } else {
      EXPECT_THROW(invert(m), Error);
    }
  }
}

TEST(Products, Basics) {
  std::mt19937_64 rng(4);
  const auto a = oracle::random_matrix(5, 7, rng);
  EXPECT_EQ(mat_mul(a, BitMatrix::identity(7)), a);
  EXPECT_TRUE(mat_vec(a, BitVector(7)).is_zero());
  EXPECT_TRUE(vec_mat(BitVector(5), a).is_zero());
  EXPECT_THROW(mat_mul(a, a), Error);
  // vec_mat is the XOR of the selected rows
  const auto v = BitVector::from_string("10110");
  EXPECT_EQ(vec_mat(v, a), a.row(0) ^ a.row(2) ^ a.row(3));
}

TEST(SolveLeft, FindsCombination) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::random_invertible(6, rng);
    BitVector c(6);
    for (std::size_t i = 0; i < 6; ++i) {
      c.set(i, rng() & 1u);
    }
    const auto x = vec_mat(c, a);
    auto solved = solve_left(a, x);
    ASSERT_TRUE(solved.has_value());
    EXPECT_EQ(*solved, c);
  }
}

TEST(RightNullspace, Orthogonal) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto m = oracle::random_matrix(4, 9, rng);
    const auto ns = right_nullspace(m);
    EXPECT_EQ(ns.rows(), 9 - oracle::rank(m));
    for (std::size_t i = 0; i < ns.rows(); ++i) {
      EXPECT_TRUE(mat_vec(m, ns.row(i)).is_zero());
    }
  }
}

TEST(Circulant, RowsAreRightShifts) {
  const auto c = circulant(BitVector::from_string("1101"));
  EXPECT_EQ(c.to_strings(), (std::vector<std::string>{"1101", "1110", "0111", "1011"}));
  EXPECT_EQ(rank(circulant(BitVector::from_string("100"))), 3u);
  EXPECT_EQ(rank(circulant(BitVector::from_string("111"))), 1u);
}

TEST(Gf2Poly, ArithmeticAndGcd) {
  const auto f = Gf2Poly::from_string(kDc15);
  EXPECT_EQ(f.degree(), std::optional<std::size_t>(10));
  EXPECT_EQ(poly_gcd(f, f), f);
  EXPECT_EQ(poly_gcd(f, Gf2Poly::x_pow_minus_one(15)), Gf2Poly::one());

  const auto g = Gf2Poly::from_exponents({6, 3, 2, 1, 0});
  const auto h = poly_gcd(g, Gf2Poly::x_pow_minus_one(9));
  const auto [q, r] = poly_divmod(h, Gf2Poly::from_exponents({2, 1, 0}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_FALSE(q.is_zero());

  EXPECT_THROW(poly_gcd(Gf2Poly(), Gf2Poly()), Error);
}

TEST(Gf2Poly, DivmodReconstructs) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    BitVector a(1 + rng() % 20);
    BitVector b(1 + rng() % 8);
    for (std::size_t i = 0; i < a.size(); ++i) a.set(i, rng() & 1u);
    for (std::size_t i = 0; i < b.size(); ++i) b.set(i, rng() & 1u);
    b.set(b.size() - 1);
    const Gf2Poly pa(a);
    const Gf2Poly pb(b);
    const auto [q, r] = poly_divmod(pa, pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_TRUE(r.is_zero() || *r.degree() < *pb.degree());
  }
}

// rank(circulant(f)) = n - deg gcd(f, x^n - 1), every f of degree < n, n <= 10.
TEST(Circulant, RankGcdLawExhaustive) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto xn1 = Gf2Poly::x_pow_minus_one(n);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
      const auto row = BitVector::from_word(bits, n);
      const auto g = poly_gcd(Gf2Poly(row), xn1);
      ASSERT_EQ(rank(circulant(row)), n - *g.degree()) << "n=" << n << " f=" << row.to_string();
    }
  }
}
