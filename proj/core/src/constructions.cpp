#include "ciskit/constructions.hpp"

#include <numeric>
#include <vector>

#include "ciskit/cis.hpp"
#include "ciskit/error.hpp"

namespace ciskit {

LinearCode double_circulant(const Gf2Poly& f, std::size_t n) {
  if (n == 0) {
    raise(Errc::InvalidArgument, "double circulant order must be positive");
  }
  return LinearCode::systematic(circulant(f.to_row(n)));
}

bool circulant_is_invertible(const Gf2Poly& f, std::size_t n) {
  if (f.is_zero()) {
    return false;
  }
  const Gf2Poly g = poly_gcd(f, Gf2Poly::x_pow_minus_one(n));
  return g.degree() == std::size_t{0};
}

bool is_prime(unsigned long q) {
  if (q < 2) {
    return false;
  }
  for (unsigned long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      return false;
    }
  }
  return true;
}

namespace {

void require_odd_prime(unsigned q) {
  if (q < 3 || !is_prime(q)) {
    raise(Errc::NotOddPrime, "q = " + std::to_string(q) + " is not an odd prime");
  }
}

bool odd(long v) { return v % 2 != 0; }

}  // namespace

SrgParams paley_params(unsigned q) {
  require_odd_prime(q);
  const long lq = q;
  if (q % 4 == 1) {
    return {SrgParams::Kind::Srg, lq, (lq - 1) / 2, (lq - 5) / 4, (lq - 1) / 4};
  }
  return {SrgParams::Kind::Drt, lq, (lq - 1) / 2, (lq - 3) / 4, (lq + 1) / 4};
}

BitMatrix paley_matrix(unsigned q) {
  require_odd_prime(q);
  std::vector<bool> square(q, false);
  for (unsigned long x = 1; x < q; ++x) {
    square[(x * x) % q] = true;
  }
  BitMatrix m(q, q);
  for (unsigned i = 0; i < q; ++i) {
    for (unsigned j = 0; j < q; ++j) {
      if (square[(j + q - i) % q]) {
        m.set(i, j);
      }
    }
  }
  return m;
}

bool satisfies_axioms(const BitMatrix& a, const SrgParams& p) {
  const std::size_t n = a.rows();
  if (!a.is_square() || static_cast<long>(n) != p.order) {
    return false;
  }
  const BitMatrix t = a.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<long>(a.row(i).weight()) != p.kappa || static_cast<long>(t.row(i).weight()) != p.kappa) {
      return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
      const long aij = a.get(i, j);
      const long aji = a.get(j, i);
      if (p.kind == SrgParams::Kind::Srg) {
        if (aij != aji || (i == j && aij != 0)) {
          return false;
        }
      } else if (aij + aji != (i == j ? 0 : 1)) {
        return false;
      }
      const long square = static_cast<long>((a.row(i) & t.row(j)).weight());
      const long identity = i == j ? 1 : 0;
      long expected = p.lambda * aij + p.mu * (1 - identity - aij);
      if (p.kind == SrgParams::Kind::Srg) {
        expected += p.kappa * identity;
      }
      if (square != expected) {
        return false;
      }
    }
  }
  return true;
}

LinearCode srg_cis(const BitMatrix& a, const SrgParams& p, int case_number) {
  using Kind = SrgParams::Kind;
  Kind kind = Kind::Srg;
  bool parity_ok = odd(p.order);
  switch (case_number) {
    case 1:
      parity_ok = parity_ok && !odd(p.kappa) && !odd(p.lambda) && odd(p.mu);
      break;
    case 2:
      kind = Kind::Drt;
      parity_ok = parity_ok && odd(p.kappa) && odd(p.mu) && !odd(p.lambda);
      break;
    case 3:
      parity_ok = parity_ok && !odd(p.kappa) && odd(p.lambda) && odd(p.mu);
      break;
    case 4:
      kind = Kind::Drt;
      parity_ok = parity_ok && !odd(p.kappa) && odd(p.lambda) && odd(p.mu);
      break;
    default:
      raise(Errc::InvalidArgument, "SRG/DRT case must be 1, 2, 3 or 4");
  }
  if (!parity_ok) {
    raise(Errc::ParityViolation, "parameters do not meet the parity hypotheses of case " + std::to_string(case_number));
  }
  if (p.kind != kind) {
    raise(Errc::AxiomViolation, std::string("case ") + std::to_string(case_number) + " requires a " +
                                    (kind == Kind::Srg ? "strongly regular graph" : "doubly regular tournament"));
  }
  if (!satisfies_axioms(a, p)) {
    raise(Errc::AxiomViolation, "adjacency matrix does not satisfy the integer axioms for these parameters");
  }
  const std::size_t n = a.rows();
  BitMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (case_number == 1) {
      m.row(i).flip(i);
    } else if (case_number >= 3) {
      m.row(i) ^= BitVector::ones(n);
    }
  }
  if (!determinant_nonzero(m)) {
    raise(Errc::AxiomViolation, "M is singular");
  }
  return LinearCode::systematic(m);
}

LinearCode paley_cis(unsigned q) {
  require_odd_prime(q);
  const SrgParams p = paley_params(q);
  if (q % 8 == 5) {
    return srg_cis(paley_matrix(q), p, 1);
  }
  if (q % 8 == 3) {
    return srg_cis(paley_matrix(q), p, 2);
  }
  raise(Errc::BadResidueClass, "q must be 3 or 5 mod 8");
}

LinearCode cyclic_code(std::size_t length, const Gf2Poly& g) {
  if (g.is_zero() || !poly_divmod(Gf2Poly::x_pow_minus_one(length), g).second.is_zero()) {
    raise(Errc::NotDivisor, "g(x) does not divide x^N - 1");
  }
  const std::size_t k = length - *g.degree();
  if (k == 0) {
    raise(Errc::InvalidArgument, "g(x) = x^N - 1 generates the zero code");
  }
  BitMatrix m(k, length);
  for (std::size_t i = 0; i < k; ++i) {
    m.row(i) = (Gf2Poly::monomial(i) * g).to_row(length);
  }
  return LinearCode(std::move(m));
}

LinearCode shorten(const LinearCode& code, std::size_t index) {
  if (index >= code.length()) {
    raise(Errc::BadIndex, "shortening index out of range");
  }
  BitMatrix g = code.generator();
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!g.get(i, index)) {
      continue;
    }
    if (!pivot) {
      pivot = i;
    } else {
      g.row(i) ^= g.row(*pivot);
    }
  }
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (i != pivot) {
      rows.push_back(i);
    }
  }
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    if (j != index) {
      cols.push_back(j);
    }
  }
  return LinearCode(g.select_rows(rows).select_columns(cols));
}

LinearCode extend_parity(const LinearCode& code, std::optional<std::size_t> position) {
  const std::size_t n = code.length();
  const std::size_t at = position.value_or(n);
  if (at > n) {
    raise(Errc::BadIndex, "parity position out of range");
  }
  const auto& g = code.generator();
  BitMatrix out(g.rows(), n + 1);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.get(i, j)) {
        out.set(i, j < at ? j : j + 1);
      }
    }
    out.set(i, at, g.row(i).weight() % 2 == 1);
  }
  return LinearCode(std::move(out));
}

BuildUpMultipliers build_up_multipliers(const BuildUpInput& in) {
  const std::size_t n = in.a.rows();
  if (!in.a.is_square() || in.x.size() != n || in.y.size() != n) {
    raise(Errc::DimensionMismatch, "build-up needs square A and x, y of matching length");
  }
  auto c = solve_left(in.a, in.x);
  if (!c || !determinant_nonzero(in.a)) {
    raise(Errc::BaseNotCis, "A is singular");
  }
  BuildUpMultipliers m;
  m.z = !c->dot(in.y);
  m.c = std::move(*c);
  return m;
}

LinearCode build_up(const BuildUpInput& in) {
  const auto mult = build_up_multipliers(in);
  const std::size_t n = in.a.rows();
  const std::size_t len = 2 * n + 2;
  BitMatrix g(n + 1, len);
  g.set(0, 0);
  g.set(0, n + 1, mult.z);
  for (std::size_t j = 0; j < n; ++j) {
    g.set(0, n + 2 + j, in.x.get(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i + 1, i + 1);
    g.set(i + 1, n + 1, in.y.get(i));
    for (std::size_t j = 0; j < n; ++j) {
      g.set(i + 1, n + 2 + j, in.a.get(i, j));
    }
  }
  return LinearCode(std::move(g));
}

BitMatrix systematic_cis_block(const LinearCode& code) {
  if (code.length() != 2 * code.dimension() || !code.systematic_form()) {
    raise(Errc::BaseNotCis, "code is not in systematic form (I | A)");
  }
  BitMatrix a = *code.right_block();
  if (!determinant_nonzero(a)) {
    raise(Errc::BaseNotCis, "A is singular");
  }
  return a;
}

LinearCode build_up(const LinearCode& base, const BitVector& x, const BitVector& y) {
  return build_up(BuildUpInput{systematic_cis_block(base), x, y});
}

LinearCode build_up_circulant(const LinearCode& code) {
  if (code.length() != 2 * code.dimension() || !code.systematic_form()) {
    raise(Errc::BaseNotCis, "code is not in systematic form (I | A)");
  }
  const BitMatrix a = *code.right_block();
  const std::size_t n = a.rows();
  if (!(circulant(a.row(0)) == a)) {
    raise(Errc::InvalidArgument, "right block is not circulant");
  }
  if (a.row(0).weight() % 2 == 0) {
    raise(Errc::EvenWeightRow, "first row of the circulant has even weight");
  }
  if (!determinant_nonzero(a)) {
    raise(Errc::BaseNotCis, "A is singular");
  }
  const std::size_t len = 2 * n + 2;
  BitMatrix g(n + 1, len);
  g.set(0, 0);
  g.set(0, n + 1, n % 2 == 0);
  for (std::size_t j = 0; j < n; ++j) {
    g.set(0, n + 2 + j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.set(i + 1, i + 1);
    g.set(i + 1, n + 1);
    for (std::size_t j = 0; j < n; ++j) {
      g.set(i + 1, n + 2 + j, a.get(i, j));
    }
  }
  return LinearCode(std::move(g));
}

Reduction reduce_matrix(const BitMatrix& a) {
  const std::size_t n = a.rows();
  if (!a.is_square() || n < 2) {
    raise(Errc::BaseNotCis, "reduction needs an invertible A of order at least 2");
  }
  if (!determinant_nonzero(a)) {
    raise(Errc::BaseNotCis, "A is singular");
  }
  const BitMatrix trimmed = a.column_block(1, n - 1);
  // The n rows of `trimmed` satisfy exactly one linear relation d.
  const BitMatrix relations = right_nullspace(trimmed.transpose());
  const BitVector& d = relations.row(0);
  const std::size_t j = d.first_set();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j) {
      keep.push_back(i);
    }
  }
  return {trimmed.select_rows(keep), j};
}

LinearCode reduce(const LinearCode& code) {
  return LinearCode::systematic(reduce_matrix(systematic_cis_block(code)).a);
}

}  // namespace ciskit
