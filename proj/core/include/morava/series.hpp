#pragma once

#include <vector>

#include "morava/binomial.hpp"
#include "morava/rational.hpp"

namespace morava {

// Power series with exact rational coefficients, truncated at x^M.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(long long M);
  static TruncatedSeries one(long long M);

  long long order() const { return static_cast<long long>(c_.size()) - 1; }
  const Rational& coefficient(long long m) const;
  void set_coefficient(long long m, const Rational& value);
  const std::vector<Rational>& coefficients() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& c) const;

  // Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries reciprocal() const;

  // s^e for rational e.  Integer e works whenever defined (negative e needs
  // an invertible constant term); fractional e uses the binomial series and
  // requires constant term exactly 1.
  TruncatedSeries pow(const Rational& e) const;

  // (1 - x^t)^e, expanded directly.
  static TruncatedSeries one_minus_power(long long M, unsigned t,
                                         const Rational& e);

 private:
  std::vector<Rational> c_;
};

// Generating function  sum_m chi_n(B Sigma_m) x^m  truncated at x^M:
//   prod_{r >= 0} (1 - x^(p^r))^(-c_r),   c_r = subgroup_count_zpn(p, n, r).
TruncatedSeries chi_symmetric_genfun(long long p, long long n, long long M);

// sum_m |B Sigma_m|_p x^m = (1 - x^p)^(1/p) / (1 - x).
TruncatedSeries sym_cardinality_series(long long p, long long M);

// Closed product for a single coefficient: prod_{d <= m, p | d} (1 - 1/d).
Rational sym_cardinality_product(long long p, long long m);

// Number of subgroups of order p^r in (Q_p/Z_p)^n, i.e. the Gaussian
// binomial [n+r-1, r]_p.
Integer subgroup_count_zpn(long long p, long long n, long long r);

}  // namespace morava
