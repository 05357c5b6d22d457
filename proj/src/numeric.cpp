#include "zagreb/numeric.hpp"

#include <stdexcept>

namespace zagreb {

double to_double(const Integer& value) { return value.convert_to<double>(); }

double to_double(const Rational& value) {
  // convert_to<double> on cpp_rational rounds correctly for our magnitudes.
  return value.convert_to<double>();
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_fraction_string(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  // round half away from zero: floor((2*num*scale + den) / (2*den))
  Integer scaled = (2 * num * scale + den) / (2 * den);
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += ".";
    out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

}  // namespace zagreb
