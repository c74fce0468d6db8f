#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "ciskit/linear_code.hpp"
#include "ciskit/numeric.hpp"

namespace ciskit {

struct ClassEntry {
  /// A systematic CIS generator (I | A) of the class.
  LinearCode representative;
  /// Canonical form key; distinct classes have distinct keys.
  std::vector<std::uint64_t> key;
  /// Canonical generator rows.
  BitMatrix canonical;
  std::size_t min_distance = 0;
  bool self_dual = false;
  bool formally_self_dual = false;
  /// Number of invertible A with span(I | A) in this class, when known.
  std::optional<std::uint64_t> systematic_count;
};

struct BuildUpStats {
  struct Stage {
    std::size_t variants_per_code;  // K
    std::size_t classes;
  };
  std::vector<Stage> stages;
  /// Every CIS partition variant of every base code was used.
  bool exhausted = false;
  std::uint64_t candidates = 0;
};

struct ClassificationReport {
  unsigned n = 0;  // codes are [2n, n]
  std::vector<ClassEntry> classes;  // sorted by key
  std::optional<BuildUpStats> buildup;

  std::size_t total() const noexcept { return classes.size(); }
  /// Number of classes with minimum distance d.
  std::size_t count_with_distance(std::size_t d) const;
  std::vector<std::vector<std::uint64_t>> keys() const;
};

/// Classes of [2n, n] CIS codes from all invertible A with sorted rows.
/// Throws Errc::TooLarge for n > 5.
ClassificationReport classify_exhaustive(unsigned n);

struct BuildUpOptions {
  /// K for the first stage; doubled until the class count is unchanged for
  /// two successive stages or the variants run out.
  std::size_t initial_variants = 8;
  /// Ignore the plateau rule and use every variant.
  bool exhaust = false;
};

/// Classes of length 2(base.n + 1) obtained by building up from every
/// base class, over re-systematized variants of each (one per ordered CIS
/// partition, up to row and column permutation of A) and all (x, y).
/// Throws Errc::MissingBase when the base is empty, Errc::TooLarge beyond
/// length 12.
ClassificationReport classify_buildup(const ClassificationReport& base, const BuildUpOptions& options = {});
/// Builds up from the length-2 code to length 2n.
ClassificationReport classify_buildup_chain(unsigned n, const BuildUpOptions& options = {});

struct MassCheck {
  unsigned n = 0;
  std::vector<std::uint64_t> per_class;  // |Orb(C_j) ∩ C_sys|
  std::uint64_t unmatched = 0;           // matrices whose code is in no listed class
  BigInt sum;
  BigInt gn;
  bool complete() const { return sum == gn; }
};

/// Buckets every A in GL(n, 2) by the class of span(I | A).
/// Throws Errc::TooLarge for n > 4.
MassCheck mass_check(const ClassificationReport& report);

struct BucketCounts {
  std::size_t self_dual = 0;
  std::size_t fsd_not_sd = 0;
  std::size_t not_fsd = 0;
  std::size_t total() const noexcept { return self_dual + fsd_not_sd + not_fsd; }
  friend bool operator==(const BucketCounts&, const BucketCounts&) = default;
};

/// Per minimum distance: (sd, non-sd fsd, non-fsd).
std::map<std::size_t, BucketCounts> fsd_sd_buckets(const ClassificationReport& report);

/// One line per class: len=<2n> d=<d> sd=<0|1> fsd=<0|1> gen=<hex rows>.
void write_report(std::ostream& out, const ClassificationReport& report);
/// Rebuilds classes from a report; properties are recomputed.
ClassificationReport read_report(std::istream& in);

}  // namespace ciskit
