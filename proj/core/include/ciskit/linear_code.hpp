#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ciskit/bit_matrix.hpp"
#include "ciskit/limits.hpp"
#include "ciskit/numeric.hpp"

namespace ciskit {

/// A binary linear [n, k] code held by a full-rank k×n generator matrix.
class LinearCode {
 public:
  /// Throws Errc::NotFullRank when the rows are dependent.
  explicit LinearCode(BitMatrix generator);
  /// Code spanned by the rows of `rows`; dependent rows are dropped.
  static LinearCode span_of(const BitMatrix& rows);
  /// Span of (I | A) for a square A.
  static LinearCode systematic(const BitMatrix& a);

  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const BitMatrix& generator() const noexcept { return generator_; }
  /// Reduced row echelon generator; identical for equal codes.
  const EchelonForm& echelon() const noexcept { return echelon_; }

  /// (I | A) when the first k coordinates form an information set.
  const std::optional<BitMatrix>& systematic_form() const noexcept { return systematic_; }
  /// The A block of systematic_form(), for [2k, k] codes.
  std::optional<BitMatrix> right_block() const;

  BitVector encode(const BitVector& message) const { return vec_mat(message, generator_); }
  bool contains(const BitVector& word) const;

  /// Same set of codewords.
  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.echelon_.reduced == b.echelon_.reduced;
  }

 private:
  BitMatrix generator_;
  EchelonForm echelon_;
  std::optional<BitMatrix> systematic_;
};

/// Column j of the result is column perm[j] of C.
LinearCode permute_columns(const LinearCode& code, std::span<const std::size_t> perm);

/// Explicit, possibly nonlinear, list of distinct binary words.
class UnrestrictedCode {
 public:
  UnrestrictedCode(std::size_t length, std::vector<BitVector> words);
  static UnrestrictedCode from_linear(const LinearCode& code, const EnumerationLimits& limits = default_limits());

  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  /// Sorted.
  std::span<const BitVector> words() const noexcept { return words_; }
  bool contains(const BitVector& word) const;

 private:
  std::size_t length_;
  std::vector<BitVector> words_;
};

struct WeightDistribution {
  std::vector<std::uint64_t> counts;  // counts[w] = A_w

  std::uint64_t total() const noexcept;
  /// Smallest w > 0 with A_w != 0, if any.
  std::optional<std::size_t> min_nonzero_weight() const noexcept;
  WeightDistribution& merge(const WeightDistribution& other);
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exact distance distribution B_i and its MacWilliams transform B_i^⊥.
struct DistanceDistribution {
  std::size_t length = 0;
  Rational size;  // |C|
  std::vector<Rational> primal;
  std::vector<Rational> dual;

  /// Smallest i > 0 with B_i^⊥ != 0; nullopt when there is none.
  std::optional<std::size_t> dual_distance() const;
  std::optional<std::size_t> min_distance() const;
  bool dual_nonnegative() const;
};

/// Codewords of a linear code for messages in the Gray-code index range
/// [begin, end). Partial results over disjoint ranges merge by addition, and
/// partial minima by min.
WeightDistribution weight_distribution_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end);
/// Smallest nonzero weight over [begin, end); SIZE_MAX when no nonzero word.
std::size_t min_weight_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end);

/// Exhaustive; throws Errc::TooLarge above limits.max_dimension.
WeightDistribution weight_distribution(const LinearCode& code, const EnumerationLimits& limits = default_limits());
/// Exact minimum nonzero weight; for the zero code returns 0.
std::size_t min_distance(const LinearCode& code, const EnumerationLimits& limits = default_limits());

DistanceDistribution distance_distribution(const UnrestrictedCode& code,
                                           const EnumerationLimits& limits = default_limits());
DistanceDistribution distance_distribution(const LinearCode& code,
                                           const EnumerationLimits& limits = default_limits());

/// K_j(i) = Σ_s (-1)^s C(i, s) C(n - i, j - s).
BigInt krawtchouk(unsigned n, unsigned j, unsigned i);
/// B^⊥_j = (1/size) Σ_i B_i K_j(i).
std::vector<Rational> macwilliams_transform(std::span<const Rational> distribution, std::size_t n,
                                            const Rational& size);

LinearCode dual_code(const LinearCode& code);

std::size_t dual_distance(const LinearCode& code, const EnumerationLimits& limits = default_limits());
/// Smallest i > 0 with B_i^⊥ != 0; throws Errc::InvalidArgument when no such i.
std::size_t dual_distance(const UnrestrictedCode& code, const EnumerationLimits& limits = default_limits());

bool is_self_dual(const LinearCode& code);
bool is_formally_self_dual(const LinearCode& code, const EnumerationLimits& limits = default_limits());
bool is_even_fsd(const LinearCode& code, const EnumerationLimits& limits = default_limits());

}  // namespace ciskit
