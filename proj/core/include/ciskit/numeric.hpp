#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ciskit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

}  // namespace ciskit
