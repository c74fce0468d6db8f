#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ciskit/linear_code.hpp"

namespace ciskit {

/// Canonical representative of a code under coordinate permutation.
struct CanonicalForm {
  /// Reduced echelon generator of the canonical code.
  BitMatrix generator;
  /// Canonical coordinate p is coordinate permutation[p] of the input, so
  /// permute_columns(input, permutation) spans the canonical code.
  std::vector<std::size_t> permutation;
  /// generator rows packed as words (bit p = coordinate p); the comparison key.
  std::vector<std::uint64_t> key;
  /// Number of automorphism generators found during the search.
  std::size_t automorphisms_found = 0;
};

/// Partition refinement plus backtracking with automorphism pruning.
/// Throws Errc::TooLarge above length 64 or dimension 20.
CanonicalForm canonical_form(const LinearCode& code);

/// Same, for linearly independent rows packed as words (bit j = coordinate j).
CanonicalForm canonical_form_packed(std::span<const std::uint64_t> rows, std::size_t length);

bool are_equivalent(const LinearCode& a, const LinearCode& b);

/// C is permutation-equivalent to its dual.
bool is_isodual(const LinearCode& code);

}  // namespace ciskit
