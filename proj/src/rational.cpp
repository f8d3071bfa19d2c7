#include "gcard/rational.hpp"

#include <stdexcept>

namespace gcard {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  value_ = den > 0 ? boost::multiprecision::cpp_rational(num, den) : boost::multiprecision::cpp_rational(-num, -den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  }
}

Rational reciprocal(const BigInt& value) { return Rational(BigInt(1), value); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace gcard
