#include "morava/series.hpp"

#include <stdexcept>

namespace morava {

TruncatedSeries::TruncatedSeries(long long M) {
  if (M < 0) throw std::domain_error("series: truncation order must be >= 0");
  c_.assign(static_cast<size_t>(M) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::one(long long M) {
  TruncatedSeries s(M);
  s.c_[0] = 1;
  return s;
}

const Rational& TruncatedSeries::coefficient(long long m) const {
  if (m < 0 || m > order())
    throw std::out_of_range("series: coefficient index out of range");
  return c_[static_cast<size_t>(m)];
}

void TruncatedSeries::set_coefficient(long long m, const Rational& value) {
  if (m < 0 || m > order())
    throw std::out_of_range("series: coefficient index out of range");
  c_[static_cast<size_t>(m)] = value;
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("series: mismatched truncation orders");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries out(order());
  for (long long m = 0; m <= order(); ++m)
    out.c_[m] = c_[m] + o.c_[m];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries out(order());
  for (long long m = 0; m <= order(); ++m)
    out.c_[m] = c_[m] - o.c_[m];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries out(order());
  for (long long i = 0; i <= order(); ++i) {
    if (c_[i] == 0) continue;
    for (long long j = 0; i + j <= order(); ++j) {
      if (o.c_[j] == 0) continue;
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
  TruncatedSeries out(order());
  for (long long m = 0; m <= order(); ++m) out.c_[m] = c_[m] * c;
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (c_[0] == 0)
    throw std::domain_error("series: reciprocal needs a nonzero constant term");
  TruncatedSeries out(order());
  Rational inv0 = Rational(1) / c_[0];
  out.c_[0] = inv0;
  for (long long m = 1; m <= order(); ++m) {
    Rational acc = 0;
    for (long long k = 1; k <= m; ++k) acc += c_[k] * out.c_[m - k];
    out.c_[m] = -inv0 * acc;
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(const Rational& e) const {
  if (denominator(e) == 1) {
    Integer k = numerator(e);
    const TruncatedSeries base = k >= 0 ? *this : reciprocal();
    if (k < 0) k = -k;
    TruncatedSeries out = one(order());
    for (Integer i = 0; i < k; ++i) out = out * base;
    return out;
  }
  if (c_[0] != 1)
    throw std::domain_error(
        "series: fractional power needs constant term 1");
  // (1 + u)^e = sum_k binom(e, k) u^k with u of positive order.
  TruncatedSeries u = *this - one(order());
  TruncatedSeries out = one(order());
  TruncatedSeries upow = one(order());
  for (long long k = 1; k <= order(); ++k) {
    upow = upow * u;
    out = out + upow.scaled(rational_binomial(e, static_cast<unsigned long>(k)));
  }
  return out;
}

TruncatedSeries TruncatedSeries::one_minus_power(long long M, unsigned t,
                                                 const Rational& e) {
  if (t == 0) throw std::domain_error("series: (1 - x^0) is zero");
  TruncatedSeries out(M);
  for (long long k = 0; k * t <= M; ++k) {
    Rational c = rational_binomial(e, static_cast<unsigned long>(k));
    if (k % 2 == 1) c = -c;
    out.set_coefficient(k * t, c);
  }
  return out;
}

Integer subgroup_count_zpn(long long p, long long n, long long r) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (n < 0 || r < 0) throw std::domain_error("n, r must be >= 0");
  Rational q = qbinomial(n + r - 1, static_cast<unsigned long>(r), Rational(p));
  if (denominator(q) != 1 || q < 0)
    throw std::logic_error("subgroup count left the integers");
  return numerator(q);
}

TruncatedSeries chi_symmetric_genfun(long long p, long long n, long long M) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (n < 0) throw std::domain_error("n must be >= 0");
  TruncatedSeries out = TruncatedSeries::one(M);
  Integer pr = 1;
  for (long long r = 0; pr <= M; ++r, pr *= p) {
    Integer c = subgroup_count_zpn(p, n, r);
    out = out * TruncatedSeries::one_minus_power(
                    M, pr.convert_to<unsigned>(), Rational(-c));
  }
  return out;
}

TruncatedSeries sym_cardinality_series(long long p, long long M) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  TruncatedSeries root = TruncatedSeries::one_minus_power(
      M, static_cast<unsigned>(p), Rational(Integer(1), Integer(p)));
  TruncatedSeries geometric(M);
  for (long long m = 0; m <= M; ++m) geometric.set_coefficient(m, 1);
  return root * geometric;
}

Rational sym_cardinality_product(long long p, long long m) {
  if (!is_prime(p)) throw std::domain_error("p must be prime");
  if (m < 0) throw std::domain_error("m must be >= 0");
  Rational out = 1;
  for (long long d = p; d <= m; d += p)
    out *= Rational(Integer(d - 1), Integer(d));
  return out;
}

}  // namespace morava
