#include "ciskit/permutation.hpp"

#include <bit>
#include <mutex>

#include "ciskit/cis.hpp"
#include "ciskit/error.hpp"
#include "parallel.hpp"

namespace ciskit {

PermutationTable::PermutationTable(unsigned n, std::vector<std::uint32_t> table) : n_(n), table_(std::move(table)) {
  if (n_ > max_variables) {
    raise(Errc::TooLarge, "permutation tables support at most 20 variables");
  }
  if (table_.size() != (std::size_t{1} << n_)) {
    raise(Errc::WrongSize, "permutation table must have 2^n entries");
  }
  std::vector<bool> seen(table_.size(), false);
  for (auto v : table_) {
    if (v >= table_.size() || seen[v]) {
      raise(Errc::NotBijective, "table is not a bijection on n-bit values");
    }
    seen[v] = true;
  }
}

PermutationTable PermutationTable::identity(unsigned n) {
  std::vector<std::uint32_t> t(std::size_t{1} << n);
  for (std::size_t x = 0; x < t.size(); ++x) {
    t[x] = static_cast<std::uint32_t>(x);
  }
  return PermutationTable(n, std::move(t));
}

PermutationTable extract_permutation(const LinearCode& code) {
  if (code.length() != 2 * code.dimension() || !code.systematic_form()) {
    raise(Errc::NotSystematicCis, "code is not of the form (I | A)");
  }
  const BitMatrix a = *code.right_block();
  const auto n = static_cast<unsigned>(a.rows());
  if (n > PermutationTable::max_variables) {
    raise(Errc::TooLarge, "permutation tables support at most 20 variables");
  }
  if (!determinant_nonzero(a)) {
    raise(Errc::NotSystematicCis, "A is singular, so the last n coordinates are not an information set");
  }
  std::vector<std::uint32_t> rows(n);
  for (unsigned i = 0; i < n; ++i) {
    rows[i] = static_cast<std::uint32_t>(a.row(i).to_word());
  }
  // Gray order: each step adds one row of A.
  std::vector<std::uint32_t> t(std::size_t{1} << n, 0);
  std::uint32_t value = 0;
  for (std::uint32_t i = 1; i < t.size(); ++i) {
    value ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    t[i ^ (i >> 1)] = value;
  }
  return PermutationTable(n, std::move(t));
}

std::int64_t walsh(const PermutationTable& f, std::uint32_t a, std::uint32_t b) {
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const int parity = (std::popcount(a & x) + std::popcount(b & f(x))) & 1;
    sum += parity ? -1 : 1;
  }
  return sum;
}

namespace {

/// In-place fast Walsh-Hadamard transform of ±1 values of x ↦ b·F(x).
void component_spectrum(const PermutationTable& f, std::uint32_t b, std::vector<std::int64_t>& out) {
  const std::size_t size = f.size();
  out.resize(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    out[x] = (std::popcount(b & f(x)) & 1) ? -1 : 1;
  }
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const auto u = out[j];
        const auto v = out[j + len];
        out[j] = u + v;
        out[j + len] = u - v;
      }
    }
  }
}

}  // namespace

std::vector<std::int64_t> walsh_spectrum(const PermutationTable& f) {
  if (f.variables() > 12) {
    raise(Errc::TooLarge, "full Walsh spectrum limited to 12 variables");
  }
  const std::size_t size = f.size();
  std::vector<std::int64_t> spectrum(size * size);
  std::vector<std::int64_t> row;
  for (std::uint32_t b = 0; b < size; ++b) {
    component_spectrum(f, b, row);
    std::copy(row.begin(), row.end(), spectrum.begin() + static_cast<std::ptrdiff_t>(b * size));
  }
  return spectrum;
}

GciReport gci_order_walsh(const PermutationTable& f, const EnumerationLimits& limits) {
  const std::size_t size = f.size();
  GciReport best;
  best.order = 2 * f.variables() + 1;
  std::mutex merge_mutex;
  auto better = [](const GciReport& x, const GciReport& y) {
    if (x.order != y.order) {
      return x.order < y.order;
    }
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  };
  detail::parallel_slices(limits.jobs, size, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    GciReport local;
    local.order = 2 * f.variables() + 1;
    std::vector<std::int64_t> row;
    for (auto b = static_cast<std::uint32_t>(begin); b < end; ++b) {
      component_spectrum(f, b, row);
      for (std::uint32_t a = 0; a < size; ++a) {
        if ((a | b) == 0 || row[a] == 0) {
          continue;
        }
        GciReport candidate{static_cast<unsigned>(std::popcount(a) + std::popcount(b)), a, b, row[a]};
        if (better(candidate, local)) {
          local = candidate;
        }
      }
    }
    std::lock_guard lock(merge_mutex);
    if (better(local, best)) {
      best = local;
    }
  });
  return best;
}

UnrestrictedCode graph_code(const PermutationTable& f) {
  const std::size_t n = f.variables();
  std::vector<BitVector> words;
  words.reserve(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    words.push_back(BitVector::from_word(x, n).concat(BitVector::from_word(f(x), n)));
  }
  return UnrestrictedCode(2 * n, std::move(words));
}

unsigned gci_order_dual(const PermutationTable& f, const EnumerationLimits& limits) {
  return static_cast<unsigned>(dual_distance(graph_code(f), limits));
}

unsigned gci_order_dual(const LinearCode& code, const EnumerationLimits& limits) {
  if (code.length() != 2 * code.dimension() || !is_cis_systematic(code)) {
    raise(Errc::NotSystematicCis, "code is not systematic CIS");
  }
  const auto dd = distance_distribution(code, limits);
  return static_cast<unsigned>(*dd.dual_distance());
}

}  // namespace ciskit
