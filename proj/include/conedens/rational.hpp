#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace conedens {

// All densities, bounds and margins are exact rationals.  Floating point is
// never used in a verdict; approx() exists only for display.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form, denominator always present and positive: "0/1", "3/4".
std::string fraction_string(const Rational& r);

// Accepts "p/q", a bare integer "p", or a plain decimal like "0.25".
Rational parse_fraction(const std::string& text);

double approx(const Rational& r);

}  // namespace conedens
