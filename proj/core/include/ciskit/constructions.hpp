#pragma once

#include <cstddef>
#include <optional>

#include "ciskit/gf2_poly.hpp"
#include "ciskit/linear_code.hpp"

namespace ciskit {

// Double circulant codes

/// Span of (I | circulant(f)). Throws Errc::DegreeTooHigh when deg f >= n.
LinearCode double_circulant(const Gf2Poly& f, std::size_t n);
/// gcd(f, x^n - 1) = 1, which makes the double circulant code CIS.
bool circulant_is_invertible(const Gf2Poly& f, std::size_t n);

// Strongly regular graphs, doubly regular tournaments, Paley matrices

struct SrgParams {
  enum class Kind { Srg, Drt };
  Kind kind = Kind::Srg;
  long order = 0;
  long kappa = 0;
  long lambda = 0;
  long mu = 0;
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

bool is_prime(unsigned long q);

/// Throws Errc::NotOddPrime.
SrgParams paley_params(unsigned q);
/// q_ij = 1 iff j - i is a nonzero square mod q. Throws Errc::NotOddPrime.
BitMatrix paley_matrix(unsigned q);

/// The integer matrix identities of an SRG or DRT, checked without reducing
/// mod 2.
bool satisfies_axioms(const BitMatrix& adjacency, const SrgParams& params);

/// (I, Q + I) for q = 5 mod 8, (I, Q) for q = 3 mod 8.
/// Throws Errc::NotOddPrime or Errc::BadResidueClass.
LinearCode paley_cis(unsigned q);

/// Span of (I, M) for the four parity cases: 1: SRG, M = A + I;
/// 2: DRT, M = A; 3: SRG, M = A + J; 4: DRT, M = A + J.
/// Throws Errc::ParityViolation when the order or parameter parities do not
/// match the case, Errc::AxiomViolation when the matrix is not of the
/// required kind with these parameters, Errc::InvalidArgument for a bad case.
LinearCode srg_cis(const BitMatrix& adjacency, const SrgParams& params, int case_number);

// Cyclic codes

/// Rows x^i g(x), i < N - deg g. Throws Errc::NotDivisor unless g | x^N - 1.
LinearCode cyclic_code(std::size_t length, const Gf2Poly& g);
/// Codewords vanishing at `index`, with that coordinate removed.
/// Throws Errc::BadIndex.
LinearCode shorten(const LinearCode& code, std::size_t index);
/// Adds an overall parity coordinate, at the end unless `position` is given.
LinearCode extend_parity(const LinearCode& code, std::optional<std::size_t> position = std::nullopt);

// Building up

struct BuildUpInput {
  BitMatrix a;  // invertible n×n
  BitVector x;  // length n
  BitVector y;  // length n
};

/// c with x = Σ c_i r_i and z = 1 + Σ c_i y_i.
struct BuildUpMultipliers {
  BitVector c;
  bool z = false;
};

BuildUpMultipliers build_up_multipliers(const BuildUpInput& input);

/// The (n+1)×(2n+2) matrix with rows (1, 0, z, x) and (0, e_i, y_i, r_i).
/// Throws Errc::BaseNotCis when A is singular.
LinearCode build_up(const BuildUpInput& input);
/// Same, taking A from a systematic CIS code (I | A).
LinearCode build_up(const LinearCode& base, const BitVector& x, const BitVector& y);

/// The bordered double circulant: x, y all ones, z = 1 if n is even else 0.
/// Throws Errc::EvenWeightRow, Errc::BaseNotCis, or Errc::InvalidArgument
/// when the right block is not circulant.
LinearCode build_up_circulant(const LinearCode& double_circulant_code);

struct Reduction {
  BitMatrix a;               // (n-1)×(n-1), invertible
  std::size_t deleted_row;  // j, 0-based
};

/// Drops the first column of A and the smallest-index row j taking part in
/// the resulting dependency. Throws Errc::BaseNotCis.
Reduction reduce_matrix(const BitMatrix& a);
LinearCode reduce(const LinearCode& code);

/// Right block A of a systematic CIS code; throws Errc::BaseNotCis otherwise.
BitMatrix systematic_cis_block(const LinearCode& code);

}  // namespace ciskit
