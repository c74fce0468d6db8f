#include "ciskit/gf2_poly.hpp"

#include <algorithm>

#include "ciskit/error.hpp"

namespace ciskit {

Gf2Poly::Gf2Poly(BitVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Gf2Poly::trim() {
  std::size_t len = coeffs_.size();
  while (len > 0 && !coeffs_.get(len - 1)) {
    --len;
  }
  if (len != coeffs_.size()) {
    coeffs_ = coeffs_.slice(0, len);
  }
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exponents) {
  std::size_t top = 0;
  for (auto e : exponents) {
    top = std::max(top, e + 1);
  }
  BitVector c(top);
  for (auto e : exponents) {
    c.flip(e);
  }
  return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::from_string(std::string_view coefficients) {
  return Gf2Poly(BitVector::from_string(coefficients));
}

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  BitVector c(degree + 1);
  c.set(degree);
  return Gf2Poly(std::move(c));
}

Gf2Poly Gf2Poly::x_pow_minus_one(std::size_t n) {
  BitVector c(n + 1);
  c.flip(0);
  c.flip(n);
  return Gf2Poly(std::move(c));
}

std::optional<std::size_t> Gf2Poly::degree() const noexcept {
  if (coeffs_.empty()) {
    return std::nullopt;
  }
  return coeffs_.size() - 1;
}

BitVector Gf2Poly::to_row(std::size_t length) const {
  if (coeffs_.size() > length) {
    raise(Errc::DegreeTooHigh, "polynomial degree must be below the row length");
  }
  BitVector row(length);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_.get(i)) {
      row.set(i);
    }
  }
  return row;
}

std::string Gf2Poly::to_string() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (!coeffs_.get(i)) {
      continue;
    }
    if (!out.empty()) {
      out += " + ";
    }
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  BitVector c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_.get(i)) {
      c.flip(i);
    }
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    if (b.coeffs_.get(i)) {
      c.flip(i);
    }
  }
  return Gf2Poly(std::move(c));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  BitVector c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!a.coeffs_.get(i)) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_.get(j)) {
        c.flip(i + j);
      }
    }
  }
  return Gf2Poly(std::move(c));
}

std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) {
    raise(Errc::InvalidArgument, "polynomial division by zero");
  }
  const std::size_t db = *b.degree();
  if (a.is_zero() || *a.degree() < db) {
    return {Gf2Poly{}, a};
  }
  BitVector rem = a.coefficients();
  BitVector quo(*a.degree() - db + 1);
  for (std::size_t top = *a.degree() + 1; top-- > db;) {
    if (!rem.get(top)) {
      continue;
    }
    const std::size_t shift = top - db;
    quo.set(shift);
    for (std::size_t j = 0; j <= db; ++j) {
      if (b.coefficient(j)) {
        rem.flip(j + shift);
      }
    }
  }
  return {Gf2Poly(std::move(quo)), Gf2Poly(std::move(rem))};
}

Gf2Poly poly_gcd(const Gf2Poly& f, const Gf2Poly& g) {
  if (f.is_zero() && g.is_zero()) {
    raise(Errc::BothZero, "gcd of two zero polynomials");
  }
  Gf2Poly a = f;
  Gf2Poly b = g;
  while (!b.is_zero()) {
    Gf2Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;  // leading coefficient is 1 over GF(2)
}

}  // namespace ciskit
