#pragma once

#include "ciskit/numeric.hpp"

namespace ciskit {

/// |GL(n, 2)| = Π_{j<n} (2^n - 2^j).
BigInt gl2_order(unsigned n);
/// g_n / n!, the number of unordered bases of F_2^n.
BigInt e_n_upper(unsigned n);

/// Σ_{j=2}^{d} Σ_{t=1}^{j-1} C(n, j-t) C(n, t) t 2^{n(n-1)}; zero for d = 1.
/// Throws Errc::OutOfRange unless 1 <= d <= 2n.
BigInt vg_bound_M(unsigned n, unsigned d);

/// Number of invertible A such that some nonzero set of at most d columns of
/// (I, A) is linearly dependent. Throws Errc::TooLarge for n > 4 and
/// Errc::OutOfRange unless 1 <= d <= 2n.
BigInt brute_B(unsigned n, unsigned d);

/// Σ_t C(n, t) C(n, j - t) == C(2n, j).
bool chu_vandermonde_holds(unsigned n, unsigned j);

}  // namespace ciskit
