#include "ciskit/classification.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ciskit/cis.hpp"
#include "ciskit/constructions.hpp"
#include "ciskit/counting.hpp"
#include "ciskit/equivalence.hpp"
#include "ciskit/error.hpp"
#include "ciskit/io.hpp"

namespace ciskit {

namespace {

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : key) {
      h = (h ^ w) * 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

/// A square matrix over GF(2) of order <= 16, row i packed with bit j = column j.
using SmallMatrix = std::vector<std::uint32_t>;

std::vector<std::uint64_t> systematic_rows(const SmallMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = (std::uint64_t{1} << i) | (std::uint64_t{a[i]} << n);
  }
  return rows;
}

LinearCode code_from_rows(std::span<const std::uint64_t> rows, std::size_t length) {
  std::vector<BitVector> v;
  v.reserve(rows.size());
  for (auto r : rows) {
    v.push_back(BitVector::from_word(r, length));
  }
  return LinearCode(BitMatrix::from_rows(std::move(v)));
}

std::optional<SmallMatrix> small_inverse(SmallMatrix a) {
  const std::size_t n = a.size();
  SmallMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv[i] = 1u << i;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && ((a[pivot] >> col) & 1u) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return std::nullopt;
    }
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && ((a[i] >> col) & 1u)) {
        a[i] ^= a[col];
        inv[i] ^= inv[col];
      }
    }
  }
  return inv;
}

ClassEntry make_entry(std::span<const std::uint64_t> rows, std::size_t length, CanonicalForm form) {
  LinearCode code = code_from_rows(rows, length);
  ClassEntry e{code, std::move(form.key), std::move(form.generator), 0, false, false, std::nullopt};
  e.min_distance = min_distance(code);
  e.self_dual = is_self_dual(code);
  e.formally_self_dual = is_formally_self_dual(code);
  return e;
}

void sort_classes(ClassificationReport& report) {
  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassEntry& a, const ClassEntry& b) { return a.key < b.key; });
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

/// Collects classes keyed by canonical form.
class ClassTable {
 public:
  explicit ClassTable(std::size_t length) : length_(length) {}

  /// Index of the class of the code spanned by `rows`; new classes keep
  /// `rows` as their representative.
  std::size_t add(const std::vector<std::uint64_t>& rows) {
    CanonicalForm form = canonical_form_packed(rows, length_);
    auto [it, inserted] = index_.try_emplace(form.key, pending_.size());
    if (inserted) {
      pending_.push_back({rows, std::move(form)});
    }
    return it->second;
  }

  std::size_t size() const noexcept { return pending_.size(); }

  std::vector<ClassEntry> finish() {
    std::vector<ClassEntry> out;
    out.reserve(pending_.size());
    for (auto& [rows, form] : pending_) {
      out.push_back(make_entry(rows, length_, std::move(form)));
    }
    return out;
  }

 private:
  std::size_t length_;
  std::unordered_map<Key, std::size_t, KeyHash> index_;
  std::vector<std::pair<std::vector<std::uint64_t>, CanonicalForm>> pending_;
};

/// Representative of A under A -> P A Q: minimal sorted column list over all
/// row orders P. Build-up outputs over all (x, y) are invariant under this
/// action up to equivalence.
SmallMatrix row_column_canonical(const SmallMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> cols(n);
  do {
    for (std::size_t s = 0; s < n; ++s) {
      std::uint32_t c = 0;
      for (std::size_t t = 0; t < n; ++t) {
        c |= ((a[perm[t]] >> s) & 1u) << t;
      }
      cols[s] = c;
    }
    std::sort(cols.begin(), cols.end());
    if (best.empty() || cols < best) {
      best = cols;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  SmallMatrix out(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      out[t] |= ((best[s] >> t) & 1u) << s;
    }
  }
  return out;
}

/// One A per ordered CIS partition (L, R) of the code (I | a), up to row and
/// column permutation. The systematic partition comes first.
std::vector<SmallMatrix> partition_variants(const SmallMatrix& a) {
  const std::size_t n = a.size();
  const std::size_t len = 2 * n;
  std::vector<std::uint32_t> cols(len, 0);
  for (std::size_t i = 0; i < n; ++i) {
    cols[i] = 1u << i;
    for (std::size_t j = 0; j < n; ++j) {
      cols[n + j] |= ((a[i] >> j) & 1u) << i;
    }
  }
  std::vector<SmallMatrix> out;
  std::unordered_set<Key, KeyHash> seen;
  const std::uint64_t full = (std::uint64_t{1} << len) - 1;
  // Subsets of size n in increasing numeric order (Gosper's hack).
  for (std::uint64_t mask = (std::uint64_t{1} << n) - 1; mask <= full;) {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t j = 0; j < len; ++j) {
      ((mask >> j) & 1u ? left : right).push_back(j);
    }
    SmallMatrix m(n, 0);  // row s = column left[s] viewed as a row vector
    for (std::size_t s = 0; s < n; ++s) {
      m[s] = cols[left[s]];
    }
    // Express each right column in the basis of left columns: solve v·M = col.
    if (auto inv = small_inverse(m)) {
      SmallMatrix block(n, 0);
      bool right_ok = true;
      std::vector<std::uint32_t> right_cols;
      for (std::size_t s = 0; s < n; ++s) {
        std::uint32_t v = 0;
        for (std::size_t t = 0; t < n; ++t) {
          if ((cols[right[s]] >> t) & 1u) {
            v ^= (*inv)[t];
          }
        }
        right_cols.push_back(v);
        for (std::size_t t = 0; t < n; ++t) {
          block[t] |= ((v >> t) & 1u) << s;
        }
      }
      right_ok = small_inverse(block).has_value();
      if (right_ok) {
        SmallMatrix canon = row_column_canonical(block);
        Key k(canon.begin(), canon.end());
        if (seen.insert(k).second) {
          out.push_back(std::move(canon));
        }
      }
    }
    if (mask == full) {
      break;
    }
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  // Keep the code's own A first so K = 1 is the plain construction.
  const SmallMatrix own = row_column_canonical(a);
  auto it = std::find(out.begin(), out.end(), own);
  if (it != out.end()) {
    std::rotate(out.begin(), it, it + 1);
  }
  return out;
}

SmallMatrix small_from(const BitMatrix& a) {
  SmallMatrix m(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    m[i] = static_cast<std::uint32_t>(a.row(i).to_word());
  }
  return m;
}

/// Feeds every build-up of (I | a) into the table; returns the number of candidates.
std::uint64_t build_up_all(const SmallMatrix& a, ClassTable& table) {
  const std::size_t m = a.size();
  const SmallMatrix inv = *small_inverse(a);
  std::vector<std::uint64_t> rows(m + 1);
  const std::uint32_t limit = 1u << m;
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < limit; ++x) {
    std::uint32_t c = 0;  // x = c·A
    for (std::size_t i = 0; i < m; ++i) {
      if ((x >> i) & 1u) {
        c ^= inv[i];
      }
    }
    for (std::uint32_t y = 0; y < limit; ++y) {
      const std::uint64_t z = 1u ^ (static_cast<unsigned>(std::popcount(c & y)) & 1u);
      rows[0] = 1u | (z << (m + 1)) | (std::uint64_t{x} << (m + 2));
      for (std::size_t i = 0; i < m; ++i) {
        rows[i + 1] = (std::uint64_t{1} << (i + 1)) | (std::uint64_t{(y >> i) & 1u} << (m + 1)) |
                      (std::uint64_t{a[i]} << (m + 2));
      }
      table.add(rows);
      ++count;
    }
  }
  return count;
}

}  // namespace

std::size_t ClassificationReport::count_with_distance(std::size_t d) const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [d](const ClassEntry& e) { return e.min_distance == d; }));
}

std::vector<std::vector<std::uint64_t>> ClassificationReport::keys() const {
  std::vector<Key> out;
  out.reserve(classes.size());
  for (const auto& c : classes) {
    out.push_back(c.key);
  }
  return out;
}

ClassificationReport classify_exhaustive(unsigned n) {
  if (n == 0) {
    raise(Errc::InvalidArgument, "n must be positive");
  }
  if (n > 5) {
    raise(Errc::TooLarge, "exhaustive classification is limited to n <= 5");
  }
  const std::size_t length = 2 * n;
  ClassTable table(length);
  std::vector<std::uint64_t> counts;
  SmallMatrix a(n, 0);

  // Rows strictly increasing and independent; span tracked as a set of
  // 2^n vectors.
  auto dfs = [&](auto&& self, std::size_t depth, std::uint32_t previous, std::uint64_t span) -> void {
    if (depth == n) {
      const std::size_t idx = table.add(systematic_rows(a));
      if (idx >= counts.size()) {
        counts.resize(idx + 1, 0);
      }
      ++counts[idx];
      return;
    }
    for (std::uint32_t r = depth == 0 ? 1 : previous + 1; r < (1u << n); ++r) {
      if ((span >> r) & 1u) {
        continue;
      }
      std::uint64_t next = span;
      for (std::uint32_t v = 0; v < (1u << n); ++v) {
        if ((span >> v) & 1u) {
          next |= std::uint64_t{1} << (v ^ r);
        }
      }
      a[depth] = r;
      self(self, depth + 1, r, next);
    }
  };
  dfs(dfs, 0, 0, 1);

  ClassificationReport report;
  report.n = n;
  report.classes = table.finish();
  const std::uint64_t orderings = factorial(n);
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    report.classes[i].systematic_count = counts[i] * orderings;
  }
  sort_classes(report);
  return report;
}

ClassificationReport classify_buildup(const ClassificationReport& base, const BuildUpOptions& options) {
  if (base.classes.empty() || base.n == 0) {
    raise(Errc::MissingBase, "build-up needs a non-empty base classification");
  }
  const unsigned n = base.n + 1;
  if (n > 6) {
    raise(Errc::TooLarge, "build-up classification is limited to length 12");
  }
  std::vector<std::vector<SmallMatrix>> variants;
  variants.reserve(base.classes.size());
  for (const auto& entry : base.classes) {
    variants.push_back(partition_variants(small_from(systematic_cis_block(entry.representative))));
  }

  ClassTable table(2 * n);
  BuildUpStats stats;
  std::size_t done = 0;
  std::size_t k = std::max<std::size_t>(1, options.initial_variants);
  while (true) {
    bool remaining = false;
    for (const auto& list : variants) {
      for (std::size_t v = done; v < std::min(k, list.size()); ++v) {
        stats.candidates += build_up_all(list[v], table);
      }
      remaining = remaining || list.size() > k;
    }
    stats.stages.push_back({k, table.size()});
    done = k;
    if (!remaining) {
      stats.exhausted = true;
      break;
    }
    const auto& s = stats.stages;
    if (!options.exhaust && s.size() >= 3 && s[s.size() - 1].classes == s[s.size() - 2].classes &&
        s[s.size() - 2].classes == s[s.size() - 3].classes) {
      break;
    }
    k *= 2;
  }

  ClassificationReport report;
  report.n = n;
  report.classes = table.finish();
  report.buildup = std::move(stats);
  sort_classes(report);
  return report;
}

ClassificationReport classify_buildup_chain(unsigned n, const BuildUpOptions& options) {
  if (n == 0) {
    raise(Errc::InvalidArgument, "n must be positive");
  }
  ClassificationReport report = classify_exhaustive(1);
  for (unsigned m = 2; m <= n; ++m) {
    report = classify_buildup(report, options);
  }
  return report;
}

MassCheck mass_check(const ClassificationReport& report) {
  const unsigned n = report.n;
  if (n > 4) {
    raise(Errc::TooLarge, "mass check enumerates GL(n, 2) only for n <= 4");
  }
  std::unordered_map<Key, std::size_t, KeyHash> index;
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    index.emplace(report.classes[i].key, i);
  }
  MassCheck check;
  check.n = n;
  check.per_class.assign(report.classes.size(), 0);
  const std::uint32_t mask = (1u << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  SmallMatrix a(n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (unsigned i = 0; i < n; ++i) {
      a[i] = static_cast<std::uint32_t>(bits >> (n * i)) & mask;
    }
    if (!small_inverse(a)) {
      continue;
    }
    const auto form = canonical_form_packed(systematic_rows(a), 2 * n);
    auto it = index.find(form.key);
    if (it == index.end()) {
      ++check.unmatched;
    } else {
      ++check.per_class[it->second];
    }
  }
  check.sum = 0;
  for (auto c : check.per_class) {
    check.sum += c;
  }
  check.gn = gl2_order(n);
  return check;
}

std::map<std::size_t, BucketCounts> fsd_sd_buckets(const ClassificationReport& report) {
  std::map<std::size_t, BucketCounts> out;
  for (const auto& c : report.classes) {
    auto& b = out[c.min_distance];
    if (c.self_dual) {
      ++b.self_dual;
    } else if (c.formally_self_dual) {
      ++b.fsd_not_sd;
    } else {
      ++b.not_fsd;
    }
  }
  return out;
}

void write_report(std::ostream& out, const ClassificationReport& report) {
  for (const auto& c : report.classes) {
    out << "len=" << 2 * report.n << " d=" << c.min_distance << " sd=" << (c.self_dual ? 1 : 0)
        << " fsd=" << (c.formally_self_dual ? 1 : 0) << " gen=" << rows_to_hex(c.canonical) << '\n';
  }
}

ClassificationReport read_report(std::istream& in) {
  ClassificationReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    std::istringstream fields(line);
    std::map<std::string, std::string> kv;
    std::string token;
    while (fields >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) {
        raise(Errc::Parse, "line " + std::to_string(line_no) + ": expected key=value");
      }
      kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
    if (!kv.count("len") || !kv.count("gen")) {
      raise(Errc::Parse, "line " + std::to_string(line_no) + ": missing len or gen");
    }
    const std::size_t length = std::stoul(kv["len"]);
    if (length == 0 || length % 2 != 0) {
      raise(Errc::Parse, "line " + std::to_string(line_no) + ": length must be even and positive");
    }
    if (report.n == 0) {
      report.n = static_cast<unsigned>(length / 2);
    } else if (report.n != length / 2) {
      raise(Errc::Parse, "line " + std::to_string(line_no) + ": mixed lengths");
    }
    const LinearCode code(rows_from_hex(kv["gen"], length));
    const auto decision = find_cis_partition(code);
    if (!decision.is_cis()) {
      raise(Errc::Parse, "line " + std::to_string(line_no) + ": code is not CIS");
    }
    std::vector<std::size_t> order = decision.certificate->left;
    order.insert(order.end(), decision.certificate->right.begin(), decision.certificate->right.end());
    const LinearCode permuted = permute_columns(code, order);
    const BitMatrix a = systematic_cis_block(permuted);
    const auto rows = systematic_rows(small_from(a));
    report.classes.push_back(make_entry(rows, length, canonical_form_packed(rows, length)));
    const auto& e = report.classes.back();
    if (kv.count("d") && std::stoul(kv["d"]) != e.min_distance) {
      raise(Errc::Parse, "line " + std::to_string(line_no) + ": stated distance disagrees with the code");
    }
  }
  sort_classes(report);
  return report;
}

}  // namespace ciskit
