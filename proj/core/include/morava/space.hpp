#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "morava/group.hpp"
#include "morava/rational.hpp"

namespace morava {

class SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

// One generalized Eilenberg-MacLane factor K(A, degree) with A the abelian
// group with the given cyclic invariant factors.  degree 0 means the
// underlying set of A (a finite set of components).
struct GemFactor {
  std::vector<unsigned> invariant_factors;
  unsigned degree = 1;

  Integer group_order() const;
  std::string group_name() const;
};

// Symbolic pi-finite space.  Immutable expression tree; chi values are
// cached per node, so share subtrees freely.
class SpaceExpr {
 public:
  enum class Kind {
    Point,
    Empty,
    Gem,
    Classifying,
    CupFiber2,
    Product,
    Coproduct,
    Pushout
  };

  static SpacePtr point();
  static SpacePtr empty();
  static SpacePtr em(std::vector<unsigned> invariant_factors, unsigned degree);
  static SpacePtr gem(std::vector<GemFactor> factors);
  static SpacePtr classifying(FiniteGroup G);
  // Fiber of the m-fold cup power map on K(Z/p, 2); a (2m-1)-finite p-space.
  static SpacePtr cup_fiber2(unsigned m, long long p);
  static SpacePtr product(SpacePtr a, SpacePtr b);
  static SpacePtr coproduct(SpacePtr a, SpacePtr b);
  // Homotopy pushout of a <- c -> b; chi extends formally by additivity.
  static SpacePtr pushout(SpacePtr a, SpacePtr b, SpacePtr c);

  Kind kind() const { return kind_; }
  const std::vector<GemFactor>& gem_factors() const { return factors_; }
  const FiniteGroup& group() const { return *group_; }
  unsigned cup_m() const { return cup_m_; }
  long long cup_p() const { return cup_p_; }
  size_t child_count() const { return children_.size(); }
  const SpacePtr& child(size_t i) const { return children_.at(i); }

 private:
  friend Rational chi(const SpacePtr&, long long, long long);
  SpaceExpr() = default;

  Kind kind_ = Kind::Point;
  std::vector<GemFactor> factors_;
  std::shared_ptr<const FiniteGroup> group_;
  unsigned cup_m_ = 0;
  long long cup_p_ = 0;
  std::vector<SpacePtr> children_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<long long, long long>, Rational> chi_cache_;
  mutable std::map<long long, std::shared_ptr<ChiBgEvaluator>> bg_cache_;
};

// chi_n(X) = |[T^n, X]| at the working prime p, extended formally through
// Pushout nodes (where it may go negative).
Rational chi(const SpacePtr& X, long long n, long long p);

// Smallest d with pi_m = 0 for m > d (0 for finite sets; max over children
// for the formal constructions).
long long truncation_degree(const SpacePtr& X);

// Alternating product of homotopy group orders; Classifying nodes contribute
// their p-typical cardinality, which is what the n = -1 extrapolation
// recovers.  Extends through Coproduct/Pushout by additivity.
Rational homotopy_cardinality(const SpacePtr& X, long long p);

std::string describe(const SpacePtr& X);

struct PSmallReport {
  bool accepted = true;
  std::vector<std::string> notes;
  std::string summary() const;
};
// Checks that X makes sense at the working prime: GEM factors and cup-fiber
// nodes must live at p.  Non-p Classifying groups are accepted with a note
// (they are handled through their p-typical part).
PSmallReport validate_p_small(const SpacePtr& X, long long p);

// lambda_{X_{2,m}}(n) in closed form; defined for n >= -1, where the value
// at -1 is the extrapolated cardinality.  Requires p odd.
Rational cup_fiber_chi(unsigned m, long long p, long long n);

// Number of n x n alternating matrices over F_p of rank exactly 2k:
//   r_k(n) = p^(k(k-1)) prod_{i=1..k} (p^(2i-1) - 1) * qbinom(n, 2k)_p.
Integer skew_rank_count(unsigned n, unsigned k, long long p);

// Brute-force oracle: #{ w in Lambda^d(F_p^n) : w^(wedge m) = 0 }, by direct
// exterior-algebra arithmetic over all p^binom(n,d) elements.
Integer s_count_brute(unsigned d, unsigned m, unsigned n, long long p,
                      const GroupBudget& budget = {});

// Naive loop-order guess  prod_{m>=1} |pi_m X|^(-binom(n-1, m-1))  for a Gem
// X; agrees with chi only in degree <= 1.  Kept for comparison tables.
Rational ofun(const SpacePtr& gem, long long n);

// A chi sequence packaged for the continuity / extrapolation machinery:
// label, working prime, truncation degree, a global denominator bound whose
// ell-valuation is the allowed slack, and the value callback.
struct ChiSequence {
  std::string label;
  long long p = 0;
  long long degree = 0;
  Integer denominator_bound = 1;
  std::function<Rational(long long)> value;
};

ChiSequence chi_sequence(const SpacePtr& X, long long p);
ChiSequence chi_sequence(const ExpoPoly& e, long long degree,
                         std::string label);
ChiSequence chi_sequence_for_group(const FiniteGroup& G, long long p,
                                   const GroupBudget& budget = {});

}  // namespace morava
