#include "ciskit/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "ciskit/error.hpp"

namespace ciskit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Singular: return "singular";
    case Errc::DimensionMismatch: return "dimension-mismatch";
    case Errc::BothZero: return "both-zero";
    case Errc::TooLarge: return "too-large";
    case Errc::NotRateHalf: return "not-rate-half";
    case Errc::NotFullRank: return "not-full-rank";
    case Errc::WrongSize: return "wrong-size";
    case Errc::NotSystematicCis: return "not-systematic-cis";
    case Errc::DegreeTooHigh: return "degree-too-high";
    case Errc::NotOddPrime: return "not-odd-prime";
    case Errc::BadResidueClass: return "bad-residue-class";
    case Errc::AxiomViolation: return "axiom-violation";
    case Errc::ParityViolation: return "parity-violation";
    case Errc::NotDivisor: return "not-divisor";
    case Errc::BadIndex: return "bad-index";
    case Errc::BaseNotCis: return "base-not-cis";
    case Errc::EvenWeightRow: return "even-weight-row";
    case Errc::OutOfRange: return "out-of-range";
    case Errc::MissingBase: return "missing-base";
    case Errc::BadPrime: return "bad-prime";
    case Errc::NotFree: return "not-free";
    case Errc::NotBijective: return "not-bijective";
    case Errc::Parse: return "parse";
    case Errc::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* cap = std::getenv("CISKIT_ENUM_CAP"); cap != nullptr && *cap != '\0') {
    unsigned value = 0;
    const char* end = cap + std::strlen(cap);
    auto [ptr, ec] = std::from_chars(cap, end, value);
    if (ec != std::errc{} || ptr != end || value == 0 || value > 40) {
      raise(Errc::InvalidArgument, "CISKIT_ENUM_CAP must be an integer in [1, 40]");
    }
    limits.max_dimension = value;
  }
  return limits;
}

const EnumerationLimits& default_limits() {
  static const EnumerationLimits limits = EnumerationLimits::from_environment();
  return limits;
}

}  // namespace ciskit
