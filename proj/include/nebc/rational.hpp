#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace nebc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor/ceil to BigInt, correct for negative values.
BigInt rat_floor(const Rational& r);
BigInt rat_ceil(const Rational& r);

// Parses "p/q", "123", "-4", "0.25", ".5", "1.". Exact: "0.3" -> 3/10.
// Throws std::invalid_argument on anything else (incl. exponents).
Rational parse_rational(std::string_view text);

// "p/q" with positive q; plain "p" when the denominator is 1.
std::string rat_str(const Rational& r);

// lcm of the denominators of a set of rationals (>= 1).
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace nebc
