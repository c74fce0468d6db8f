#pragma once

#include <cstdint>
#include <vector>

#include "ciskit/linear_code.hpp"

namespace ciskit {

/// A bijection F on n-bit values, bit i of a value being coordinate i.
class PermutationTable {
 public:
  static constexpr unsigned max_variables = 20;

  /// Throws Errc::WrongSize unless table.size() == 2^n, Errc::NotBijective
  /// when values repeat or exceed n bits, Errc::TooLarge above max_variables.
  PermutationTable(unsigned n, std::vector<std::uint32_t> table);
  static PermutationTable identity(unsigned n);

  unsigned variables() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  friend bool operator==(const PermutationTable&, const PermutationTable&) = default;

 private:
  unsigned n_;
  std::vector<std::uint32_t> table_;
};

/// F(x) = x·A for a systematic CIS code (I | A).
/// Throws Errc::NotSystematicCis or Errc::TooLarge.
PermutationTable extract_permutation(const LinearCode& code);

/// Σ_x (-1)^{a·x + b·F(x)}.
std::int64_t walsh(const PermutationTable& f, std::uint32_t a, std::uint32_t b);

/// All Walsh values, indexed by (b << n) | a. Throws Errc::TooLarge for n > 12.
std::vector<std::int64_t> walsh_spectrum(const PermutationTable& f);

struct GciReport {
  /// Largest d such that every nonzero (a, b) with wt(a) + wt(b) < d has a
  /// vanishing Walsh value.
  unsigned order = 0;
  /// Lightest nonzero (a, b) with a nonzero value; ties broken by smallest a,
  /// then smallest b.
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::int64_t value = 0;
};

GciReport gci_order_walsh(const PermutationTable& f, const EnumerationLimits& limits = default_limits());

/// The graph code C_F = {(x, F(x))} on 2n coordinates, x first.
UnrestrictedCode graph_code(const PermutationTable& f);

/// Dual distance of C_F via its distance distribution and MacWilliams.
unsigned gci_order_dual(const PermutationTable& f, const EnumerationLimits& limits = default_limits());
/// For a systematic CIS code C equals C_F, so this is its dual distance.
unsigned gci_order_dual(const LinearCode& code, const EnumerationLimits& limits = default_limits());

}  // namespace ciskit
