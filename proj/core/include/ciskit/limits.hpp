#pragma once

#include <cstddef>

namespace ciskit {

/// Budgets for exhaustive enumeration. `max_dimension` bounds the number of
/// message bits enumerated for a linear code (2^max_dimension codewords);
/// `jobs` is the number of worker threads for partitioned enumerations.
struct EnumerationLimits {
  unsigned max_dimension = 28;
  unsigned jobs = 1;

  /// Pairs budget for all-pairs distance distributions, as log2(|U|^2).
  unsigned max_pair_log2 = 40;

  /// Defaults, with CISKIT_ENUM_CAP applied when set.
  static EnumerationLimits from_environment();
};

/// Process-wide default, initialised once from the environment.
const EnumerationLimits& default_limits();

}  // namespace ciskit
