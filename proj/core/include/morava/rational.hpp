#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "morava/error.hpp"

namespace morava {

// Every cardinality in the library is an exact rational.  cpp_rational keeps
// lowest terms and a positive denominator by construction, which is exactly
// the invariant the rest of the code relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& x) {
  return boost::multiprecision::numerator(x);
}
inline Integer denominator(const Rational& x) {
  return boost::multiprecision::denominator(x);
}

// Largest exponent pow_integer / pow_rational will expand.  chi values grow
// like p^(n^d); the cap turns a runaway request into a budget_error instead
// of an allocation storm.
inline constexpr unsigned long kPowExponentCap = 1ul << 20;

bool is_prime(long long m);

// ell-adic valuation, +infinity at zero.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long long v) { return Valuation(false, v); }

  bool is_infinite() const { return infinite_; }
  long long value() const;  // throws std::domain_error if infinite

  Valuation operator+(const Valuation& o) const;
  bool at_least(long long bound) const { return infinite_ || v_ >= bound; }
  bool at_least(const Valuation& bound) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b);

  std::string str() const;

 private:
  Valuation(bool inf, long long v) : infinite_(inf), v_(v) {}
  bool infinite_;
  long long v_;
};

Valuation integer_valuation(const Integer& x, long long ell);
Valuation l_valuation(const Rational& x, long long ell);

Integer pow_integer(const Integer& base, const Integer& exponent);
Rational pow_rational(const Rational& base, const Integer& exponent);

// "num/den" with the slash always present: "-4/3", "27/1".
std::string fraction_string(const Rational& x);
Rational parse_fraction(std::string_view text);

}  // namespace morava
