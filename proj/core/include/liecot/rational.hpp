#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace liecot {

// Exact scalar for all symbolic computations. cpp_rational keeps the
// canonical form invariant: denominator > 0, gcd(|num|, den) = 1 after
// every arithmetic operation.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with arbitrary-precision parts.
Rational parse_rational(std::string_view s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& r);

}  // namespace liecot
