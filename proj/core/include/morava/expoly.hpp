#pragma once

#include <string>
#include <vector>

#include "morava/binomial.hpp"
#include "morava/rational.hpp"

namespace morava {

// Integer-valued polynomial in the binomial basis: f(x) = sum a_k binom(x,k).
// Closed under sum and product, and evaluates exactly at any integer,
// including negative ones.
class IntValuedPoly {
 public:
  IntValuedPoly() = default;
  explicit IntValuedPoly(std::vector<Integer> binomial_coefficients);

  static IntValuedPoly constant(const Integer& c);
  static IntValuedPoly binom_basis(unsigned long k);  // binom(x, k)
  // binom(x + shift, k), expanded by Vandermonde convolution.
  static IntValuedPoly shifted_binom(unsigned long k, long long shift);
  // Interpolate from values f(0..D); values of an integer-valued polynomial
  // always produce integer basis coefficients.
  static IntValuedPoly from_values(const std::vector<Integer>& values);

  bool is_zero() const { return coef_.empty(); }
  long degree() const { return static_cast<long>(coef_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coef_; }
  Integer constant_term() const { return coef_.empty() ? Integer(0) : coef_[0]; }

  Integer eval(const Integer& x) const;

  IntValuedPoly operator+(const IntValuedPoly& o) const;
  IntValuedPoly operator-(const IntValuedPoly& o) const;
  IntValuedPoly operator-() const;
  IntValuedPoly operator*(const IntValuedPoly& o) const;
  IntValuedPoly scaled(const Integer& c) const;

  friend bool operator==(const IntValuedPoly& a, const IntValuedPoly& b) {
    return a.coef_ == b.coef_;
  }
  // Lexicographic by (degree, coefficients from the top); canonical term order.
  friend bool operator<(const IntValuedPoly& a, const IntValuedPoly& b);

  std::string str(const std::string& var = "n") const;

 private:
  void trim();
  std::vector<Integer> coef_;
};

// Expolynomial over a fixed prime p: finite sum  sum_i c_i * p^(f_i(n))
// with rational c_i and distinct integer-valued exponents f_i.  Canonical
// form: each f_i has zero constant term (the constant is folded into c_i),
// terms sorted by exponent, zero coefficients dropped.
class ExpoPoly {
 public:
  struct Term {
    Rational c;
    IntValuedPoly f;
  };

  explicit ExpoPoly(long long p);
  static ExpoPoly zero(long long p) { return ExpoPoly(p); }
  static ExpoPoly constant(long long p, const Rational& c);
  static ExpoPoly power_term(long long p, const Rational& c, IntValuedPoly f);

  long long prime() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational eval(const Integer& n) const;
  Rational at_minus_one() const;

  ExpoPoly operator+(const ExpoPoly& o) const;
  ExpoPoly operator-(const ExpoPoly& o) const;
  ExpoPoly operator*(const ExpoPoly& o) const;
  ExpoPoly scaled(const Rational& c) const;

  friend bool operator==(const ExpoPoly& a, const ExpoPoly& b);

  std::string str() const;

 private:
  void canonicalize();
  long long p_;
  std::vector<Term> terms_;
};

// Continuous ell-adic extension of n -> e(n) evaluated at n = -1; exists
// because the exponents are integer-valued polynomials.
Rational extrapolate_minus_one(const ExpoPoly& e);

}  // namespace morava
