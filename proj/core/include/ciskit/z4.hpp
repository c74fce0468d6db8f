#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciskit/gf2_poly.hpp"
#include "ciskit/linear_code.hpp"
#include "ciskit/permutation.hpp"

namespace ciskit {

using Z4Vector = std::vector<std::uint8_t>;

/// Row-major matrix over the integers mod 4.
class Z4Matrix {
 public:
  Z4Matrix() = default;
  Z4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws Errc::DimensionMismatch for ragged rows, Errc::InvalidArgument
  /// for entries above 3.
  static Z4Matrix from_rows(const std::vector<Z4Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint8_t get(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, unsigned v) { data_[i * cols_ + j] = static_cast<std::uint8_t>(v & 3u); }
  std::span<const std::uint8_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Z4Vector row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  /// Entries mod 2.
  BitMatrix reduce_mod2() const;

  friend bool operator==(const Z4Matrix&, const Z4Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10; symbol i occupies bits 2i and 2i+1.
BitVector gray(std::span<const std::uint8_t> v);
/// Inverse of gray on even-length vectors.
Z4Vector gray_inverse(const BitVector& bits);
/// Σ min(v_i, 4 - v_i), equal to the Hamming weight of gray(v).
std::size_t lee_weight(std::span<const std::uint8_t> v);

/// Polynomial over Z4, lowest degree first, no trailing zero coefficients.
class Z4Poly {
 public:
  Z4Poly() = default;
  explicit Z4Poly(Z4Vector coefficients);
  static Z4Poly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; the zero polynomial is reported as degree 0.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::uint8_t coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const Z4Vector& coefficients() const noexcept { return coeffs_; }
  Gf2Poly reduce_mod2() const;
  std::string to_string() const;

  friend Z4Poly operator*(const Z4Poly& a, const Z4Poly& b);
  friend bool operator==(const Z4Poly&, const Z4Poly&) = default;

 private:
  Z4Vector coeffs_;
};

/// Quotient and remainder by a polynomial with unit leading coefficient.
std::pair<Z4Poly, Z4Poly> z4_divmod(const Z4Poly& a, const Z4Poly& b);

/// Monic divisor of x^N - 1 over Z4 reducing to f2, by one Graeffe step.
/// Throws Errc::NotDivisor unless N is odd and f2 | x^N - 1.
Z4Poly hensel_lift(const Gf2Poly& f2, std::size_t n);

/// Free Z4 code with generator (I_k | A).
class Z4FreeCode {
 public:
  /// Throws Errc::InvalidArgument unless the leading block is the identity.
  explicit Z4FreeCode(Z4Matrix generator);
  /// Row-reduces over Z4 so that the first k columns become the identity.
  /// Throws Errc::NotFree when a leading column has no unit pivot.
  static Z4FreeCode systematize(const Z4Matrix& generator);
  static Z4FreeCode from_block(const Z4Matrix& a);

  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Z4Matrix& generator() const noexcept { return generator_; }
  /// Columns k..n-1 of the generator.
  Z4Matrix right_block() const;
  Z4Vector encode(std::span<const std::uint8_t> message) const;

 private:
  Z4Matrix generator_;
};

/// Every pair of generator rows is orthogonal over Z4 and n = 2k.
bool is_self_dual(const Z4FreeCode& code);

/// Gray image; 4^k words. Throws Errc::TooLarge for k > 12.
UnrestrictedCode binary_image(const Z4FreeCode& code);
/// Smallest Lee weight of a nonzero codeword. Throws Errc::TooLarge for k > 12.
std::size_t min_lee_weight(const Z4FreeCode& code);

/// Extended quadratic residue code of length p + 1 lifted to Z4, in (I | A)
/// form. Throws Errc::BadPrime unless p is a prime with p = ±1 mod 8.
Z4FreeCode z4_qr_code(unsigned p);
/// z4_qr_code(7).
Z4FreeCode octacode();

/// n = 2k and A is invertible over Z4 (unit determinant, i.e. odd mod 2).
bool is_free_cis_z4(const Z4FreeCode& code);

/// F on 2k binary variables with F(gray(u)) = gray(u·A).
/// Throws Errc::NotFree when the code is not free CIS, Errc::TooLarge when
/// 2k exceeds the table cap.
PermutationTable z4_permutation(const Z4FreeCode& code);

}  // namespace ciskit
