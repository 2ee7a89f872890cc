#include "morava/binomial.hpp"

#include <stdexcept>

namespace morava {

Integer binomial(const Integer& n, unsigned long k) {
  Integer res = 1;
  // res stays integral after each division: the running numerator is a
  // product of i consecutive integers.
  for (unsigned long i = 1; i <= k; ++i) {
    res *= n - Integer(i) + 1;
    res /= Integer(i);
  }
  return res;
}

Rational rational_binomial(const Rational& a, unsigned long k) {
  Rational res = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    res *= a - Rational(i) + 1;
    res /= Rational(i);
  }
  return res;
}

Rational qbinomial(long long a, unsigned long b, const Rational& q) {
  if (q == 1) throw std::domain_error("qbinomial: q = 1");
  Rational res = 1;
  for (unsigned long j = 1; j <= b; ++j) {
    Rational den = 1 - pow_rational(q, Integer(j));
    if (den == 0) throw std::domain_error("qbinomial: 1 - q^j vanishes");
    res *= (1 - pow_rational(q, Integer(a) - Integer(j) + 1)) / den;
  }
  return res;
}

namespace {

template <class T>
std::vector<T> inverse_transform(const std::vector<T>& x) {
  // Iterated forward differences; row r holds (Delta^r x)(i), so the head of
  // each row is xbar(r).  O(N^2) exact arithmetic.
  std::vector<T> row = x, out;
  out.reserve(x.size());
  while (!row.empty()) {
    out.push_back(row.front());
    for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

template <class T>
std::vector<T> forward_transform(const std::vector<T>& xbar) {
  std::vector<T> out(xbar.size());
  for (size_t n = 0; n < xbar.size(); ++n) {
    T acc = 0;
    for (size_t k = 0; k <= n; ++k)
      acc += T(binomial(Integer(n), k)) * xbar[k];
    out[n] = acc;
  }
  return out;
}

}  // namespace

std::vector<Rational> inverse_binomial_transform(const std::vector<Rational>& x) {
  return inverse_transform(x);
}
std::vector<Rational> binomial_transform(const std::vector<Rational>& xbar) {
  return forward_transform(xbar);
}
std::vector<Integer> inverse_binomial_transform(const std::vector<Integer>& x) {
  return inverse_transform(x);
}
std::vector<Integer> binomial_transform(const std::vector<Integer>& xbar) {
  return forward_transform(xbar);
}

}  // namespace morava
