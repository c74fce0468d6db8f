#include "ciskit/equivalence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <utility>

#include "ciskit/error.hpp"

namespace ciskit {

namespace {

constexpr std::size_t kMaxLength = 64;
constexpr std::size_t kMaxDimension = 20;
constexpr std::size_t kMaxStoredAutomorphisms = 128;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

using Cells = std::vector<std::uint64_t>;  // ordered partition, one column mask per cell
using Labeling = std::array<std::uint8_t, kMaxLength>;

class Canonizer {
 public:
  Canonizer(std::span<const std::uint64_t> rows, std::size_t length)
      : n_(length), k_(rows.size()), rows_(rows.begin(), rows.end()) {
    const std::uint64_t total = std::uint64_t{1} << k_;
    words_.reserve(static_cast<std::size_t>(total));
    std::uint64_t w = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      w ^= rows_[static_cast<std::size_t>(std::countr_zero(i))];
      words_.push_back(w);
    }
  }

  CanonicalForm run() {
    Cells root;
    root.push_back(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
    refine(root);
    search(root, 0);

    CanonicalForm out;
    out.key = best_key_;
    out.permutation.assign(best_order_.begin(), best_order_.begin() + static_cast<std::ptrdiff_t>(n_));
    out.generator = BitMatrix(k_, n_);
    for (std::size_t i = 0; i < k_; ++i) {
      out.generator.row(i) = BitVector::from_word(best_key_[i], n_);
    }
    out.automorphisms_found = automorphisms_.size();
    return out;
  }

 private:
  /// Equivariant colour refinement on the column/codeword incidence structure.
  /// Sub-cells are ordered by their hash, which depends only on the
  /// isomorphism-invariant structure, never on column labels.
  void refine(Cells& cells) const {
    std::array<std::uint64_t, kMaxLength> hash{};
    std::vector<std::pair<std::uint64_t, std::uint8_t>> scratch;
    while (cells.size() < n_) {
      hash.fill(0);
      for (const std::uint64_t w : words_) {
        std::uint64_t sig = 0x51ed270b27a3c3f1ull;
        for (const std::uint64_t c : cells) {
          sig = mix(sig + static_cast<std::uint64_t>(std::popcount(w & c)));
        }
        for (std::uint64_t bits = w; bits != 0; bits &= bits - 1) {
          hash[static_cast<std::size_t>(std::countr_zero(bits))] += sig;
        }
      }
      Cells next;
      next.reserve(n_);
      for (const std::uint64_t c : cells) {
        if (std::has_single_bit(c)) {
          next.push_back(c);
          continue;
        }
        scratch.clear();
        for (std::uint64_t bits = c; bits != 0; bits &= bits - 1) {
          const auto j = static_cast<std::uint8_t>(std::countr_zero(bits));
          scratch.emplace_back(hash[j], j);
        }
        std::sort(scratch.begin(), scratch.end());
        std::uint64_t part = 0;
        for (std::size_t i = 0; i < scratch.size(); ++i) {
          if (i > 0 && scratch[i].first != scratch[i - 1].first) {
            next.push_back(part);
            part = 0;
          }
          part |= std::uint64_t{1} << scratch[i].second;
        }
        next.push_back(part);
      }
      if (next.size() == cells.size()) {
        return;
      }
      cells = std::move(next);
    }
  }

  std::vector<std::uint64_t> leaf_key(const Cells& cells, Labeling& order) const {
    std::array<std::uint8_t, kMaxLength> position{};
    for (std::size_t p = 0; p < n_; ++p) {
      order[p] = static_cast<std::uint8_t>(std::countr_zero(cells[p]));
      position[order[p]] = static_cast<std::uint8_t>(p);
    }
    std::vector<std::uint64_t> m(k_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::uint64_t bits = rows_[i]; bits != 0; bits &= bits - 1) {
        m[i] |= std::uint64_t{1} << position[static_cast<std::size_t>(std::countr_zero(bits))];
      }
    }
    std::size_t r = 0;
    for (std::size_t p = 0; p < n_ && r < k_; ++p) {
      const std::uint64_t bit = std::uint64_t{1} << p;
      std::size_t pivot = r;
      while (pivot < k_ && (m[pivot] & bit) == 0) {
        ++pivot;
      }
      if (pivot == k_) {
        continue;
      }
      std::swap(m[r], m[pivot]);
      for (std::size_t i = 0; i < k_; ++i) {
        if (i != r && (m[i] & bit) != 0) {
          m[i] ^= m[r];
        }
      }
      ++r;
    }
    return m;
  }

  static std::size_t common_prefix(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) {
      ++i;
    }
    return i;
  }

  void record_automorphism(const Labeling& from, const Labeling& to) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) {
      return;
    }
    Labeling gamma{};
    for (std::size_t p = 0; p < n_; ++p) {
      gamma[from[p]] = to[p];
    }
    automorphisms_.push_back(gamma);
  }

  /// Returns the tree level at which the search should resume.
  std::size_t leaf(const Cells& cells, std::size_t level) {
    Labeling order{};
    auto key = leaf_key(cells, order);
    if (!have_first_) {
      have_first_ = true;
      first_key_ = key;
      first_order_ = order;
      first_path_ = path_;
      best_key_ = std::move(key);
      best_order_ = order;
      best_path_ = path_;
      return level - 1;
    }
    if (key == first_key_) {
      record_automorphism(order, first_order_);
      return common_prefix(path_, first_path_);
    }
    if (key == best_key_) {
      record_automorphism(order, best_order_);
      return common_prefix(path_, best_path_);
    }
    if (key < best_key_) {
      best_key_ = std::move(key);
      best_order_ = order;
      best_path_ = path_;
    }
    return level - 1;
  }

  std::size_t find(std::array<std::uint8_t, kMaxLength>& parent, std::size_t x) const {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  /// Orbit representatives under stored automorphisms fixing the current path.
  void orbits(std::array<std::uint8_t, kMaxLength>& parent) const {
    for (std::size_t i = 0; i < n_; ++i) {
      parent[i] = static_cast<std::uint8_t>(i);
    }
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::uint8_t v) { return gamma[v] == v; });
      if (!fixes) {
        continue;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        const auto a = find(parent, i);
        const auto b = find(parent, gamma[i]);
        if (a != b) {
          parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
        }
      }
    }
  }

  std::size_t search(const Cells& cells, std::size_t level) {
    if (cells.size() == n_) {
      return leaf(cells, level);
    }
    std::size_t target = cells.size();
    int smallest = 65;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int size = std::popcount(cells[i]);
      if (size > 1 && size < smallest) {
        smallest = size;
        target = i;
      }
    }
    std::vector<std::uint8_t> explored;
    std::array<std::uint8_t, kMaxLength> parent{};
    for (std::uint64_t bits = cells[target]; bits != 0; bits &= bits - 1) {
      const auto v = static_cast<std::uint8_t>(std::countr_zero(bits));
      if (!explored.empty()) {
        orbits(parent);
        const auto root = find(parent, v);
        if (std::any_of(explored.begin(), explored.end(), [&](std::uint8_t u) { return find(parent, u) == root; })) {
          continue;
        }
      }
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(std::uint64_t{1} << v);
      child.push_back(cells[target] & ~(std::uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      refine(child);
      path_.push_back(v);
      const std::size_t resume = search(child, level + 1);
      path_.pop_back();
      explored.push_back(v);
      if (resume < level) {
        return resume;
      }
    }
    return level - 1;
  }

  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> words_;

  std::vector<std::uint8_t> path_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_key_;
  Labeling first_order_{};
  std::vector<std::uint8_t> first_path_;
  std::vector<std::uint64_t> best_key_;
  Labeling best_order_{};
  std::vector<std::uint8_t> best_path_;
  std::vector<Labeling> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form_packed(std::span<const std::uint64_t> rows, std::size_t length) {
  if (length > kMaxLength || rows.size() > kMaxDimension) {
    raise(Errc::TooLarge, "canonical form supports length <= 64 and dimension <= 20");
  }
  if (length == 0) {
    return CanonicalForm{BitMatrix(rows.size(), 0), {}, {}, 0};
  }
  return Canonizer(rows, length).run();
}

CanonicalForm canonical_form(const LinearCode& code) {
  if (code.length() > kMaxLength || code.dimension() > kMaxDimension) {
    raise(Errc::TooLarge, "canonical form supports length <= 64 and dimension <= 20");
  }
  std::vector<std::uint64_t> rows;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    rows.push_back(code.generator().row(i).to_word());
  }
  return canonical_form_packed(rows, code.length());
}

bool are_equivalent(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length() || a.dimension() != b.dimension()) {
    return false;
  }
  return canonical_form(a).key == canonical_form(b).key;
}

bool is_isodual(const LinearCode& code) { return are_equivalent(code, dual_code(code)); }

}  // namespace ciskit
