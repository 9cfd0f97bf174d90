#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rax {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. Always stored reduced with a
// positive denominator, so equality of values is equality of
// representations.
using Rational = boost::multiprecision::cpp_rational;

/// Canonical text form "n/d", reduced, sign on the numerator ("-1/2").
std::string format_rational(const Rational& r);

/// Parses "n" or "n/d" with optional sign and surrounding whitespace.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace rax
