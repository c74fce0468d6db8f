#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ciskit/linear_code.hpp"

namespace ciskit {

/// Two disjoint information sets covering all coordinates of a [2n, n] code.
struct CisCertificate {
  std::vector<std::size_t> left;   // sorted
  std::vector<std::size_t> right;  // sorted
  friend bool operator==(const CisCertificate&, const CisCertificate&) = default;
};

enum class NotCisReason { DualWeightOne, Rank, Matroid };

std::string_view reason_name(NotCisReason reason) noexcept;

struct CisDecision {
  std::optional<CisCertificate> certificate;
  NotCisReason reason = NotCisReason::Matroid;
  /// When not CIS: coordinates T with |T| > 2 rank(T), so no partition into
  /// two bases can exist.
  std::vector<std::size_t> obstruction;

  bool is_cis() const noexcept { return certificate.has_value(); }
};

/// Throws Errc::WrongSize unless |indices| equals the dimension.
bool is_information_set(const LinearCode& code, std::span<const std::size_t> indices);

/// First n and last n coordinates are both information sets.
/// Throws Errc::NotRateHalf unless the code is [2n, n].
bool is_cis_systematic(const LinearCode& code);

/// Exact decision by matroid partition, after a randomized pre-pass.
/// Throws Errc::NotRateHalf unless the code is [2n, n].
CisDecision find_cis_partition(const LinearCode& code);

/// Cheap necessary conditions: a zero coordinate, or rank(A) < n/2 for an
/// (I | A) form. nullopt means undecided.
std::optional<NotCisReason> quick_reject(const LinearCode& code);

/// Rank of the columns `indices` of the generator.
std::size_t column_rank(const LinearCode& code, std::span<const std::size_t> indices);

}  // namespace ciskit
