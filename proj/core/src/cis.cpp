#include "ciskit/cis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>
#include <random>
#include <tuple>

#include "ciskit/error.hpp"

namespace ciskit {

namespace {

void require_rate_half(const LinearCode& code) {
  if (code.length() != 2 * code.dimension() || code.dimension() == 0) {
    raise(Errc::NotRateHalf, "expected a [2n, n] code");
  }
}

/// Generator columns packed as words; needs dimension <= 64.
std::vector<std::uint64_t> packed_columns(const LinearCode& code) {
  const auto& g = code.generator();
  std::vector<std::uint64_t> cols(code.length(), 0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (g.get(i, j)) {
        cols[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return cols;
}

std::size_t packed_rank(std::vector<std::uint64_t> v) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      continue;
    }
    const std::uint64_t low = v[i] & (~v[i] + 1);
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] & low) {
        v[j] ^= v[i];
      }
    }
    ++r;
  }
  return r;
}

/// Incremental basis of a column set that reports circuits: reduce(v)
/// returns the mask of basis members whose sum is v, or nullopt when v is
/// independent of them.
class CircuitBasis {
 public:
  void assign(const std::vector<std::uint64_t>& vectors) {
    rows_.clear();
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      std::uint64_t v = vectors[i];
      std::uint64_t comb = std::uint64_t{1} << i;
      for (const auto& [pivot, vec, c] : rows_) {
        if (v & pivot) {
          v ^= vec;
          comb ^= c;
        }
      }
      const std::uint64_t pivot = v & (~v + 1);
      for (auto& row : rows_) {
        if (std::get<1>(row) & pivot) {
          std::get<1>(row) ^= v;
          std::get<2>(row) ^= comb;
        }
      }
      rows_.emplace_back(pivot, v, comb);
    }
  }

  std::optional<std::uint64_t> reduce(std::uint64_t v) const {
    std::uint64_t comb = 0;
    for (const auto& [pivot, vec, c] : rows_) {
      if (v & pivot) {
        v ^= vec;
        comb ^= c;
      }
    }
    if (v != 0) {
      return std::nullopt;
    }
    return comb;
  }

 private:
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows_;
};

std::vector<std::size_t> complement(std::span<const std::size_t> part, std::size_t length) {
  std::vector<bool> in(length, false);
  for (auto i : part) {
    in[i] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length; ++i) {
    if (!in[i]) {
      out.push_back(i);
    }
  }
  return out;
}

/// Edmonds' matroid partition for two copies of the column matroid.
CisDecision matroid_partition(const std::vector<std::uint64_t>& cols, std::size_t n) {
  const std::size_t m = cols.size();
  constexpr int kFree = -1;
  std::vector<int> owner(m, kFree);

  for (std::size_t s = 0; s < m; ++s) {
    std::array<std::vector<std::size_t>, 2> members;
    std::array<CircuitBasis, 2> basis;
    for (int side = 0; side < 2; ++side) {
      std::vector<std::uint64_t> vecs;
      for (std::size_t e = 0; e < m; ++e) {
        if (owner[e] == side) {
          members[side].push_back(e);
          vecs.push_back(cols[e]);
        }
      }
      basis[side].assign(vecs);
    }

    // BFS over the exchange graph from s.
    std::vector<long> parent(m, -2);
    std::vector<int> via(m, kFree);  // side that x enters when moving along its edge
    std::deque<std::size_t> queue{s};
    parent[s] = -1;
    long sink = -1;
    int sink_side = kFree;
    while (!queue.empty() && sink < 0) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (int side = 0; side < 2 && sink < 0; ++side) {
        if (owner[x] == side) {
          continue;
        }
        const auto circuit = basis[side].reduce(cols[x]);
        if (!circuit) {
          sink = static_cast<long>(x);
          sink_side = side;
          break;
        }
        for (std::uint64_t bits = *circuit; bits != 0; bits &= bits - 1) {
          const std::size_t y = members[side][static_cast<std::size_t>(std::countr_zero(bits))];
          if (parent[y] == -2) {
            parent[y] = static_cast<long>(x);
            via[y] = side;
            queue.push_back(y);
          }
        }
      }
    }

    if (sink < 0) {
      CisDecision d;
      d.reason = NotCisReason::Matroid;
      for (std::size_t e = 0; e < m; ++e) {
        if (parent[e] != -2) {
          d.obstruction.push_back(e);
        }
      }
      return d;
    }

    // Walk back from the sink: each node takes the place of its successor.
    auto x = static_cast<std::size_t>(sink);
    int side = sink_side;
    while (true) {
      const int previous_side = via[x];
      const long p = parent[x];
      owner[x] = side;
      if (p < 0) {
        break;
      }
      side = previous_side;
      x = static_cast<std::size_t>(p);
    }
  }

  CisCertificate cert;
  for (std::size_t e = 0; e < m; ++e) {
    (owner[e] == 0 ? cert.left : cert.right).push_back(e);
  }
  if (cert.left.size() != n || cert.right.size() != n) {
    raise(Errc::InvalidArgument, "matroid partition produced unbalanced sides");
  }
  CisDecision d;
  d.certificate = std::move(cert);
  return d;
}

}  // namespace

std::string_view reason_name(NotCisReason reason) noexcept {
  switch (reason) {
    case NotCisReason::DualWeightOne:
      return "dual-weight-1";
    case NotCisReason::Rank:
      return "rank";
    case NotCisReason::Matroid:
      return "matroid";
  }
  return "unknown";
}

std::size_t column_rank(const LinearCode& code, std::span<const std::size_t> indices) {
  if (code.dimension() <= 64) {
    const auto cols = packed_columns(code);
    std::vector<std::uint64_t> v;
    v.reserve(indices.size());
    for (auto i : indices) {
      if (i >= code.length()) {
        raise(Errc::BadIndex, "coordinate index out of range");
      }
      v.push_back(cols[i]);
    }
    return packed_rank(std::move(v));
  }
  for (auto i : indices) {
    if (i >= code.length()) {
      raise(Errc::BadIndex, "coordinate index out of range");
    }
  }
  return rank(code.generator().select_columns(indices));
}

bool is_information_set(const LinearCode& code, std::span<const std::size_t> indices) {
  if (indices.size() != code.dimension()) {
    raise(Errc::WrongSize, "information set must have exactly k coordinates");
  }
  return column_rank(code, indices) == code.dimension();
}

bool is_cis_systematic(const LinearCode& code) {
  require_rate_half(code);
  const std::size_t n = code.dimension();
  std::vector<std::size_t> left(n);
  std::vector<std::size_t> right(n);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), n);
  return is_information_set(code, left) && is_information_set(code, right);
}

std::optional<NotCisReason> quick_reject(const LinearCode& code) {
  require_rate_half(code);
  const std::size_t n = code.dimension();
  for (std::size_t j = 0; j < code.length(); ++j) {
    if (code.generator().column(j).is_zero()) {
      return NotCisReason::DualWeightOne;
    }
  }
  const auto& e = code.echelon();
  std::vector<std::size_t> others = complement(e.pivots, code.length());
  const std::size_t rank_a = rank(e.reduced.select_columns(others));
  if (2 * rank_a < n) {
    return NotCisReason::Rank;
  }
  return std::nullopt;
}

CisDecision find_cis_partition(const LinearCode& code) {
  require_rate_half(code);
  const std::size_t n = code.dimension();
  const std::size_t m = code.length();
  if (n > 64) {
    raise(Errc::TooLarge, "CIS partition search supports dimension <= 64");
  }
  const auto cols = packed_columns(code);
  for (std::size_t j = 0; j < m; ++j) {
    if (cols[j] == 0) {
      CisDecision d;
      d.reason = NotCisReason::DualWeightOne;
      d.obstruction = {j};
      return d;
    }
  }

  auto try_split = [&](const std::vector<std::size_t>& order) -> std::optional<CisCertificate> {
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(cols[order[i]]);
      b.push_back(cols[order[n + i]]);
    }
    if (packed_rank(std::move(a)) != n || packed_rank(std::move(b)) != n) {
      return std::nullopt;
    }
    CisCertificate c;
    c.left.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n));
    c.right.assign(order.begin() + static_cast<std::ptrdiff_t>(n), order.end());
    std::sort(c.left.begin(), c.left.end());
    std::sort(c.right.begin(), c.right.end());
    return c;
  };

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (auto c = try_split(order)) {
    return CisDecision{std::move(c), NotCisReason::Matroid, {}};
  }
  std::mt19937_64 rng(0x43495343ull);
  for (int trial = 0; trial < 200; ++trial) {
    std::shuffle(order.begin(), order.end(), rng);
    if (auto c = try_split(order)) {
      return CisDecision{std::move(c), NotCisReason::Matroid, {}};
    }
  }
  return matroid_partition(cols, n);
}

}  // namespace ciskit
