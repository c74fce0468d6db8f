#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ciskit {

enum class Errc {
  Singular,
  DimensionMismatch,
  BothZero,
  TooLarge,
  NotRateHalf,
  NotFullRank,
  WrongSize,
  NotSystematicCis,
  DegreeTooHigh,
  NotOddPrime,
  BadResidueClass,
  AxiomViolation,
  ParityViolation,
  NotDivisor,
  BadIndex,
  BaseNotCis,
  EvenWeightRow,
  OutOfRange,
  MissingBase,
  BadPrime,
  NotFree,
  NotBijective,
  Parse,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so
/// callers (the CLI in particular) can map it to a diagnosis line.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ciskit
