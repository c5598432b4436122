#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace prym {

/// Arbitrary-precision exact rational. Every class coefficient, slope and
/// vanishing order in the library is carried in this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Canonical "p/q" rendering; integers keep the "/1" suffix.
std::string to_fraction(const Rational& value);

/// Parses "p", "p/q" or "-p/q" (whitespace not allowed). Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal(const Rational& value, int digits = 10);

/// Mixed-number rendering such as "7+4198/6269"; integers render as "7" and
/// negative values as "-(7+5/7)".
std::string to_mixed(const Rational& value);

/// 2^k as an exact rational.
Rational pow2(int k);

}  // namespace prym
