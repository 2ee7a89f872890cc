// Small independent reimplementations used to cross-check the library.
// Deliberately different algorithms: Pascal / q-Pascal recurrences instead of
// falling factorials, so a shared bug cannot hide.
#pragma once

#include <vector>

#include "morava/rational.hpp"

namespace oracles {

using morava::Integer;
using morava::Rational;

inline Integer pascal_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q, for n, k >= 0.
inline Rational q_pascal(unsigned n, unsigned k, const Rational& q) {
  if (k > n) return 0;
  std::vector<Rational> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Rational> next(std::min(i, k) + 1);
    Rational qpow = 1;
    for (unsigned j = 0; j < next.size(); ++j) {
      next[j] = j > 0 && j - 1 < row.size() ? row[j - 1] : Rational(0);
      if (j < row.size()) next[j] += qpow * row[j];
      qpow *= q;
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : Rational(0);
}

}  // namespace oracles
