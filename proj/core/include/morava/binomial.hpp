#pragma once

#include <vector>

#include "morava/rational.hpp"

namespace morava {

// binom(n, k) for arbitrary integer n via the falling factorial
//   n (n-1) ... (n-k+1) / k!
// so binom(-1, d) = (-1)^d and binom(n, k) = 0 for 0 <= n < k.
Integer binomial(const Integer& n, unsigned long k);
inline Integer binomial(long long n, unsigned long k) {
  return binomial(Integer(n), k);
}

// Same falling factorial with a rational argument (binomial series exponents).
Rational rational_binomial(const Rational& a, unsigned long k);

// Gaussian binomial [a b]_q = prod_{j=1..b} (1 - q^(a-j+1)) / (1 - q^j),
// valid for negative a as well; [-1 1]_q = -1/q.  Requires q != 1 (and the
// product to be defined, e.g. q != -1 when b >= 2).
Rational qbinomial(long long a, unsigned long b, const Rational& q);

// Forward difference functional x |-> xbar with
//   xbar(n) = sum_{k<=n} (-1)^(n-k) binom(n,k) x(k),
// the inverse of the binomial transform x(n) = sum_{k<=n} binom(n,k) xbar(k).
std::vector<Rational> inverse_binomial_transform(const std::vector<Rational>& x);
std::vector<Rational> binomial_transform(const std::vector<Rational>& xbar);

std::vector<Integer> inverse_binomial_transform(const std::vector<Integer>& x);
std::vector<Integer> binomial_transform(const std::vector<Integer>& xbar);

}  // namespace morava
