#include "morava/mahler.hpp"

#include <stdexcept>

#include "morava/binomial.hpp"

namespace morava {

namespace {

void check_ell(const ChiSequence& seq, long long ell, bool allow_any_ell) {
  if (!is_prime(ell)) throw std::domain_error("ell must be prime");
  if (!allow_any_ell && (seq.p - 1) % ell != 0)
    throw std::domain_error(
        "ell = " + std::to_string(ell) + " does not divide p - 1 = " +
        std::to_string(seq.p - 1) +
        "; the continuity theorem needs ell | p - 1");
}

std::vector<Rational> sequence_prefix(const ChiSequence& seq, long long N) {
  if (N < 0) throw std::domain_error("N must be >= 0");
  if (!seq.value) throw std::invalid_argument("sequence has no value callback");
  std::vector<Rational> x;
  x.reserve(static_cast<size_t>(N) + 1);
  for (long long n = 0; n <= N; ++n) x.push_back(seq.value(n));
  return x;
}

}  // namespace

Valuation required_valuation(long long n, long long degree, long long slack) {
  if (degree == 0)
    return n == 0 ? Valuation::finite(-slack) : Valuation::infinite();
  return Valuation::finite(n / degree - slack);
}

ContinuityCertificate certify_continuity(const ChiSequence& seq, long long ell,
                                         long long N, bool allow_any_ell) {
  check_ell(seq, ell, allow_any_ell);

  ContinuityCertificate cert;
  cert.label = seq.label;
  cert.p = seq.p;
  cert.ell = ell;
  cert.N = N;
  cert.degree = seq.degree;
  cert.slack = l_valuation(Rational(seq.denominator_bound), ell).value();

  std::vector<Rational> x = sequence_prefix(seq, N);
  std::vector<Rational> xbar = inverse_binomial_transform(x);
  for (long long n = 0; n <= N; ++n) {
    CertificateRow row;
    row.n = n;
    row.x = x[static_cast<size_t>(n)];
    row.xbar = xbar[static_cast<size_t>(n)];
    row.valuation = l_valuation(row.xbar, ell);
    row.required = required_valuation(n, cert.degree, cert.slack);
    row.ok = row.valuation.at_least(row.required);
    if (!row.ok && !cert.first_violation) cert.first_violation = n;
    cert.pass = cert.pass && row.ok;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

ExtrapolationReport mahler_extrapolate(const ChiSequence& seq, long long ell,
                                       long long N,
                                       std::optional<Rational> target,
                                       bool allow_any_ell) {
  if (seq.p % 2 == 0)
    throw std::domain_error("extrapolation to -1 requires an odd prime p");
  check_ell(seq, ell, allow_any_ell);

  ExtrapolationReport rep;
  rep.label = seq.label;
  rep.p = seq.p;
  rep.ell = ell;
  rep.N = N;
  rep.degree = seq.degree;
  rep.slack = l_valuation(Rational(seq.denominator_bound), ell).value();
  rep.target = std::move(target);

  std::vector<Rational> x = sequence_prefix(seq, N);
  rep.xbar = inverse_binomial_transform(x);

  Rational acc = 0;
  for (long long n = 0; n <= N; ++n) {
    const Rational& term = rep.xbar[static_cast<size_t>(n)];
    acc += (n % 2 == 0) ? term : -term;
    rep.partials.push_back(acc);
    if (rep.target) {
      Valuation v = l_valuation(acc - *rep.target, ell);
      rep.target_valuations.push_back(v);
      rep.pass = rep.pass &&
                 v.at_least(required_valuation(n + 1, rep.degree, rep.slack));
    }
  }
  rep.limit = acc;
  rep.guaranteed = required_valuation(N + 1, rep.degree, rep.slack);
  return rep;
}

LambdaShiftReport lambda_shift_check(const SpacePtr& X, long long p,
                                     long long ell, long long N,
                                     bool allow_any_ell) {
  if (!X) throw std::invalid_argument("lambda_shift_check: null space");
  if (X->kind() == SpaceExpr::Kind::Pushout)
    throw std::domain_error(
        "lambda_shift_check: pushout roots have no genuine cardinality");
  if (p == 2) throw std::domain_error("lambda_shift_check: p must be odd");

  LambdaShiftReport rep;
  ChiSequence seq = chi_sequence(X, p);
  rep.label = seq.label;
  rep.p = p;
  rep.ell = ell;
  rep.target = homotopy_cardinality(X, p);
  rep.certificate = certify_continuity(seq, ell, N, allow_any_ell);
  rep.extrapolation =
      mahler_extrapolate(seq, ell, N, rep.target, allow_any_ell);
  rep.pass = rep.certificate.pass && rep.extrapolation.pass;
  return rep;
}

}  // namespace morava
