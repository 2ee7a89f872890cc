#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morava/space.hpp"

namespace morava {

// One row of a continuity certificate: the sequence value, its iterated
// forward difference, the observed ell-adic valuation and the bound it must
// meet.  For degree-0 (constant) sequences the bound is infinite: the
// differences must vanish outright.
struct CertificateRow {
  long long n = 0;
  Rational x;
  Rational xbar;
  Valuation valuation = Valuation::infinite();
  Valuation required = Valuation::infinite();
  bool ok = true;
};

// Witness that xbar(n) -> 0 ell-adically at the rate the truncation degree
// demands:  v_ell(xbar(n)) >= floor(n/d) - slack,  with slack the
// ell-valuation of the sequence's denominator bound (zero for p-spaces).
struct ContinuityCertificate {
  std::string label;
  long long p = 0;
  long long ell = 0;
  long long N = 0;
  long long degree = 0;
  long long slack = 0;
  bool pass = true;
  std::vector<CertificateRow> rows;
  std::optional<long long> first_violation;
};

ContinuityCertificate certify_continuity(const ChiSequence& seq, long long ell,
                                         long long N,
                                         bool allow_any_ell = false);

// The divisibility bound floor(n/degree) - slack as a Valuation; infinite for
// constant sequences (degree 0, n >= 1), where differences must vanish.
Valuation required_valuation(long long n, long long degree, long long slack);

// Partial sums S_n = sum_{k<=n} (-1)^k xbar(k) of the Mahler series at -1.
// With a target, checks v_ell(S_n - target) >= floor((n+1)/d) - slack.
struct ExtrapolationReport {
  std::string label;
  long long p = 0;
  long long ell = 0;
  long long N = 0;
  long long degree = 0;
  long long slack = 0;
  std::vector<Rational> xbar;
  std::vector<Rational> partials;
  Rational limit;
  Valuation guaranteed = Valuation::infinite();  // error exponent at S_N
  std::optional<Rational> target;
  std::vector<Valuation> target_valuations;
  bool pass = true;
};

ExtrapolationReport mahler_extrapolate(const ChiSequence& seq, long long ell,
                                       long long N,
                                       std::optional<Rational> target = {},
                                       bool allow_any_ell = false);

// Full lambda-shift round trip for a space: certify continuity of chi at
// (p, ell) and extrapolate to n = -1, which must recover the homotopy
// cardinality.  Requires p odd and rejects Pushout roots (their chi is
// formal, not a count).
struct LambdaShiftReport {
  std::string label;
  long long p = 0;
  long long ell = 0;
  Rational target;
  ContinuityCertificate certificate;
  ExtrapolationReport extrapolation;
  bool pass = true;
};

LambdaShiftReport lambda_shift_check(const SpacePtr& X, long long p,
                                     long long ell, long long N,
                                     bool allow_any_ell = false);

}  // namespace morava
