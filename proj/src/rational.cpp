#include "conedens/rational.hpp"

#include <stdexcept>

namespace conedens {

std::string fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty()) throw std::invalid_argument("malformed decimal '" + text + "'");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const BigInt w = whole.empty() || whole == "-" ? BigInt(0) : BigInt(whole);
    const BigInt f(frac);
    const BigInt num = neg ? BigInt(w * den - f) : BigInt(w * den + f);
    return Rational(num, den);
  }
  return Rational(BigInt(text));
}

double approx(const Rational& r) { return r.convert_to<double>(); }

}  // namespace conedens
