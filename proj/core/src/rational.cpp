#include "morava/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace morava {

bool is_prime(long long m) {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (long long d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

long long Valuation::value() const {
  if (infinite_) throw std::domain_error("valuation is infinite");
  return v_;
}

Valuation Valuation::operator+(const Valuation& o) const {
  if (infinite_ || o.infinite_) return infinite();
  return finite(v_ + o.v_);
}

bool Valuation::at_least(const Valuation& bound) const {
  if (bound.infinite_) return infinite_;
  return at_least(bound.v_);
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.v_ < b.v_;
}

std::string Valuation::str() const {
  return infinite_ ? "inf" : std::to_string(v_);
}

Valuation integer_valuation(const Integer& x, long long ell) {
  if (ell < 2) throw std::domain_error("valuation base must be >= 2");
  if (x == 0) return Valuation::infinite();
  Integer y = x;
  long long v = 0;
  while (y % ell == 0) {
    y /= ell;
    ++v;
  }
  return Valuation::finite(v);
}

Valuation l_valuation(const Rational& x, long long ell) {
  if (x == 0) return Valuation::infinite();
  // den is coprime to num, so at most one of the two counts is nonzero.
  long long vn = integer_valuation(numerator(x), ell).value();
  long long vd = integer_valuation(denominator(x), ell).value();
  return Valuation::finite(vn - vd);
}

Integer pow_integer(const Integer& base, const Integer& exponent) {
  if (exponent < 0) throw std::domain_error("pow_integer: negative exponent");
  if (exponent > kPowExponentCap)
    throw budget_error("pow_integer: exponent " + exponent.str() +
                       " exceeds cap");
  return boost::multiprecision::pow(base,
                                    exponent.convert_to<unsigned long>());
}

Rational pow_rational(const Rational& base, const Integer& exponent) {
  if (exponent >= 0) {
    return Rational(pow_integer(numerator(base), exponent),
                    pow_integer(denominator(base), exponent));
  }
  if (base == 0) throw std::domain_error("pow_rational: 0 to negative power");
  Integer num = pow_integer(denominator(base), -exponent);
  Integer den = pow_integer(numerator(base), -exponent);
  if (den < 0) {  // the backend rejects negative denominators
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string fraction_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_fraction(std::string_view text) {
  auto bad = [&] {
    throw std::invalid_argument("bad rational literal: '" + std::string(text) +
                                "'");
  };
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) bad();
  text = text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) bad();
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return 0;  // unreachable
}

}  // namespace morava
