#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zagreb {

// Arbitrary precision, so equality verdicts never depend on overflow.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

double to_double(const Integer& value);
double to_double(const Rational& value);

/// Renders "p/q", or "p" when the denominator is one.
std::string to_fraction_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` places.
std::string to_decimal_string(const Rational& value, int digits);

std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace zagreb
