#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ciskit/bit_vector.hpp"

namespace ciskit {

/// Polynomial over GF(2), coefficients stored lowest degree first. The
/// coefficient vector is trimmed so that its last coordinate, when present,
/// is the leading 1.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  explicit Gf2Poly(BitVector coefficients);

  static Gf2Poly from_exponents(std::initializer_list<std::size_t> exponents);
  /// Coefficient string, lowest degree first ("1101" is 1 + x + x^3).
  static Gf2Poly from_string(std::string_view coefficients);
  static Gf2Poly monomial(std::size_t degree);
  static Gf2Poly one() { return monomial(0); }
  /// x^n - 1, which is x^n + 1 over GF(2).
  static Gf2Poly x_pow_minus_one(std::size_t n);

  std::optional<std::size_t> degree() const noexcept;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool coefficient(std::size_t i) const noexcept { return i < coeffs_.size() && coeffs_.get(i); }
  std::size_t weight() const noexcept { return coeffs_.weight(); }
  const BitVector& coefficients() const noexcept { return coeffs_; }

  /// Coefficients padded to `length` coordinates (the circulant first row).
  BitVector to_row(std::size_t length) const;

  std::string to_string() const;  // e.g. "x^3 + x + 1"

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  void trim();

  BitVector coeffs_;
};

/// (quotient, remainder); throws Errc::InvalidArgument on division by zero.
std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b);

/// Monic gcd by the Euclidean algorithm; throws Errc::BothZero.
Gf2Poly poly_gcd(const Gf2Poly& f, const Gf2Poly& g);

}  // namespace ciskit
