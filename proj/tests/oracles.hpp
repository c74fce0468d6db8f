#pragma once

// Brute-force reference implementations. These deliberately avoid the
// library's algorithms: rank by span enumeration, codewords by plain
// message loops, equivalence by trying every permutation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ciskit/bit_matrix.hpp"
#include "ciskit/linear_code.hpp"

namespace oracle {

using Rows = std::vector<std::uint64_t>;  // bit j = coordinate j

inline Rows pack(const ciskit::BitMatrix& m) {
  Rows r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.get(i, j)) {
        w |= std::uint64_t{1} << j;
      }
    }
    r.push_back(w);
  }
  return r;
}

inline std::set<std::uint64_t> span(const Rows& rows) {
  std::set<std::uint64_t> out;
  for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << rows.size()); ++msg) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((msg >> i) & 1u) {
        w ^= rows[i];
      }
    }
    out.insert(w);
  }
  return out;
}

/// log2 of the span size.
inline std::size_t rank(const Rows& rows) {
  const auto s = span(rows).size();
  std::size_t r = 0;
  while ((std::size_t{1} << r) < s) {
    ++r;
  }
  return r;
}

inline std::size_t rank(const ciskit::BitMatrix& m) { return rank(pack(m)); }

inline std::vector<std::uint64_t> weight_distribution(const Rows& rows, std::size_t n) {
  std::vector<std::uint64_t> a(n + 1, 0);
  for (auto w : span(rows)) {
    ++a[static_cast<std::size_t>(__builtin_popcountll(w))];
  }
  return a;
}

inline std::size_t min_distance(const Rows& rows) {
  std::size_t best = 65;
  for (auto w : span(rows)) {
    if (w != 0) {
      best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(w)));
    }
  }
  return best;
}

inline std::uint64_t permute(std::uint64_t w, const std::vector<std::size_t>& perm) {
  // output coordinate p takes input coordinate perm[p]
  std::uint64_t out = 0;
  for (std::size_t p = 0; p < perm.size(); ++p) {
    if ((w >> perm[p]) & 1u) {
      out |= std::uint64_t{1} << p;
    }
  }
  return out;
}

/// Tries every coordinate permutation; only sensible for length <= 8.
inline bool equivalent(const Rows& a, const Rows& b, std::size_t n) {
  const auto target = span(b);
  const auto source = span(a);
  if (source.size() != target.size()) {
    return false;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto w : source) {
      if (!target.count(permute(w, perm))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Columns `cols` of the generator are an information set.
inline bool information_set(const Rows& rows, const std::vector<std::size_t>& cols) {
  Rows restricted;
  for (auto r : rows) {
    restricted.push_back(permute(r, cols));
  }
  return rank(restricted) == cols.size() && cols.size() == rows.size();
}

/// Any balanced partition into two information sets.
inline bool has_cis_partition(const Rows& rows, std::size_t n) {
  const std::size_t k = rows.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) {
      continue;
    }
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t j = 0; j < n; ++j) {
      ((mask >> j) & 1u ? left : right).push_back(j);
    }
    if (information_set(rows, left) && information_set(rows, right)) {
      return true;
    }
  }
  return false;
}

/// Walsh value by the defining sum.
inline long long walsh(const std::vector<std::uint32_t>& f, std::uint32_t a, std::uint32_t b) {
  long long s = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int e = (__builtin_popcount(a & x) + __builtin_popcount(b & f[x])) & 1;
    s += e ? -1 : 1;
  }
  return s;
}

/// Largest d with all nonzero (a, b) of weight < d giving zero.
inline unsigned gci_order(const std::vector<std::uint32_t>& f, unsigned n) {
  unsigned best = 2 * n + 1;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
      if ((a | b) == 0) {
        continue;
      }
      const unsigned w = static_cast<unsigned>(__builtin_popcount(a) + __builtin_popcount(b));
      if (w < best && walsh(f, a, b) != 0) {
        best = w;
      }
    }
  }
  return best;
}

inline std::uint64_t count_invertible(unsigned n) {
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
    Rows rows;
    for (unsigned i = 0; i < n; ++i) {
      rows.push_back((bits >> (n * i)) & ((1u << n) - 1));
    }
    if (rank(rows) == n) {
      ++count;
    }
  }
  return count;
}

inline ciskit::BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  ciskit::BitMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.set(i, j, rng() & 1u);
    }
  }
  return m;
}

inline ciskit::BitMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    auto m = random_matrix(n, n, rng);
    if (oracle::rank(m) == n) {
      return m;
    }
  }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::string data_path(const std::string& name) { return std::string(CISKIT_TEST_DATA) + "/" + name; }

}  // namespace oracle
