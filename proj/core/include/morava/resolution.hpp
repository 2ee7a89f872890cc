#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morava/expoly.hpp"
#include "morava/rational.hpp"

namespace morava {

// Degree-wise cardinalities x_n = |X_n| of a simplicial object together with
// the data its skeleta converge to: base prime p (0 when the sequence is
// constant or the level sizes are not prime powers), truncation degree, and
// the target |X|.
struct SimplicialCardinalitySeq {
  std::string label;
  long long p = 0;
  long long degree = 0;
  Rational target;
  std::function<Rational(long long)> value;
};

// |sk^n| = sum_{k<=n} (-1)^k xbar_k from the prefix x(0..N).  Also evaluates
// the direct form sum_{k<=n} (-1)^k binom(n+1, k+1) x_k and throws
// logic_error if the two disagree.
std::vector<Rational> skeleton_cardinalities(const std::vector<Rational>& x);

// Bar construction of a group of order g: x_n = g^n, target 1/g.
SimplicialCardinalitySeq bar_sequence(unsigned long long g);

// Cech nerve levels x_n = cardX * g^n, target cardX / g.
SimplicialCardinalitySeq cech_sequence(const Rational& card_x,
                                       unsigned long long g);

// d-fold iterated bar: x_n = g^(n^d), target g^((-1)^d).
SimplicialCardinalitySeq iterated_bar_sequence(unsigned long long g,
                                               long long d);

// Simplicial p-group determined by its Moore complex sizes |N_k G| = p^(m_k):
// |G_n| = p^(f(n)) with f the binomial transform of (m_k), so the bar levels
// are p^(n f(n)) and the W-bar levels p^(sum_{k<n} f(k)).  Both converge to
// 1/|G| with |G| = p^(f(-1)).
struct SimplicialGroupData {
  long long p = 0;
  IntValuedPoly f;
  Rational group_cardinality;
  Rational target;
  SimplicialCardinalitySeq bar;
  SimplicialCardinalitySeq wbar;
};
SimplicialGroupData simplicial_group_sequences(
    const std::vector<unsigned long long>& moore_sizes);

struct ConvergenceRow {
  long long n = 0;
  Rational x;
  Rational xbar;
  Rational sk;
  Valuation valuation = Valuation::infinite();  // v_ell(sk - target)
};

// v_ell(sk^n - target) per level; pass iff the valuations are non-decreasing
// from the burn-in degree on (default: the sequence's degree) and meet the
// rate bound floor((n+1)/d) - slack, with slack absorbing any ell in the
// target's denominator.
struct ConvergenceReport {
  std::string label;
  long long ell = 0;
  long long N = 0;
  long long degree = 0;
  long long burn_in = 0;
  long long slack = 0;
  Rational target;
  std::vector<ConvergenceRow> rows;
  bool pass = true;
  std::optional<long long> first_violation;
};

ConvergenceReport resolution_convergence(const SimplicialCardinalitySeq& seq,
                                         long long ell, long long N,
                                         std::optional<long long> burn_in = {},
                                         bool allow_any_ell = false);

}  // namespace morava
