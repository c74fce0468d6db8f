#include "ciskit/counting.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "ciskit/error.hpp"

namespace ciskit {

BigInt gl2_order(unsigned n) {
  BigInt g = 1;
  const BigInt full = BigInt(1) << n;
  for (unsigned j = 0; j < n; ++j) {
    g *= full - (BigInt(1) << j);
  }
  return g;
}

BigInt e_n_upper(unsigned n) {
  BigInt factorial = 1;
  for (unsigned i = 2; i <= n; ++i) {
    factorial *= i;
  }
  return gl2_order(n) / factorial;
}

namespace {

void check_d(unsigned n, unsigned d) {
  if (d < 1 || d > 2 * n) {
    raise(Errc::OutOfRange, "d must lie in [1, 2n]");
  }
}

}  // namespace

BigInt vg_bound_M(unsigned n, unsigned d) {
  check_d(n, d);
  BigInt sum = 0;
  for (unsigned j = 2; j <= d; ++j) {
    for (unsigned t = 1; t < j; ++t) {
      sum += binomial(n, j - t) * binomial(n, t) * t;
    }
  }
  return sum << (n * (n - 1));
}

BigInt brute_B(unsigned n, unsigned d) {
  if (n > 4) {
    raise(Errc::TooLarge, "brute-force B(n, d) enumerates GL(n, 2) only for n <= 4");
  }
  check_d(n, d);
  const std::uint32_t mask = (1u << n) - 1;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> rows(n);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (unsigned i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(code >> (n * i)) & mask;
    }
    // A v for every v; invertible iff only v = 0 maps to 0.
    bool invertible = true;
    unsigned best = 2 * n + 1;
    for (std::uint32_t v = 1; v <= mask; ++v) {
      std::uint32_t av = 0;
      for (unsigned i = 0; i < n; ++i) {
        av |= static_cast<std::uint32_t>(std::popcount(rows[i] & v) & 1) << i;
      }
      if (av == 0) {
        invertible = false;
        break;
      }
      best = std::min(best, static_cast<unsigned>(std::popcount(av) + std::popcount(v)));
    }
    if (invertible && best <= d) {
      ++count;
    }
  }
  return BigInt(count);
}

bool chu_vandermonde_holds(unsigned n, unsigned j) {
  BigInt sum = 0;
  for (unsigned t = 0; t <= j; ++t) {
    sum += binomial(n, t) * binomial(n, j - t);
  }
  return sum == binomial(2 * n, j);
}

}  // namespace ciskit
