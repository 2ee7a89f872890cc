#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "morava/expoly.hpp"
#include "morava/rational.hpp"

namespace morava {

// Resource bounds for group-theoretic computation.  Orders above
// lattice_max_order still admit multiplication-table work and the centralizer
// recursion, but not abelian-subgroup-lattice enumeration.
struct GroupBudget {
  unsigned max_order = 1000;
  unsigned lattice_max_order = 200;
  unsigned long long max_tuples = 4'000'000;
  long long max_chi_level = 64;
};

// Finite group as a verified multiplication table.  Construction checks the
// axioms (exhaustive associativity up to order 128, random sampling above)
// and precomputes inverses, element orders and the commutation matrix.
class FiniteGroup {
 public:
  static FiniteGroup from_table(unsigned order, std::vector<uint16_t> table,
                                std::string name = "",
                                const GroupBudget& budget = {});

  static FiniteGroup cyclic(unsigned m, const GroupBudget& budget = {});
  static FiniteGroup dihedral4();    // symmetries of the square, order 8
  static FiniteGroup quaternion8();  // {+-1, +-i, +-j, +-k}
  static FiniteGroup symmetric(unsigned m, const GroupBudget& budget = {});
  static FiniteGroup heisenberg3();  // upper unitriangular 3x3 over F_3
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                    const GroupBudget& budget = {});

  unsigned order() const { return order_; }
  const std::string& name() const { return name_; }
  unsigned identity() const { return identity_; }
  unsigned mul(unsigned a, unsigned b) const { return table_[a * order_ + b]; }
  unsigned inverse(unsigned a) const { return inverse_[a]; }
  unsigned conjugate(unsigned g, unsigned by) const {
    return mul(mul(by, g), inverse(by));
  }
  unsigned element_order(unsigned a) const { return element_order_[a]; }
  bool commute(unsigned a, unsigned b) const {
    return commute_[a * order_ + b];
  }
  bool is_abelian() const { return abelian_; }
  const std::vector<uint16_t>& table() const { return table_; }

  std::vector<std::vector<uint16_t>> conjugacy_classes() const;
  std::vector<uint16_t> centralizer(unsigned g) const;

 private:
  FiniteGroup() = default;
  void precompute(const GroupBudget& budget);

  unsigned order_ = 0;
  unsigned identity_ = 0;
  bool abelian_ = false;
  std::string name_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inverse_;
  std::vector<uint16_t> element_order_;
  std::vector<bool> commute_;
};

// Preset grammar: "C<m>", "D4", "Q8", "S<m>", "He3", joined with 'x' for
// direct products ("C2xC4").
FiniteGroup group_preset(const std::string& name,
                         const GroupBudget& budget = {});

// Subgroup given by its sorted element list inside a parent group.  Borrows
// the parent; keep the FiniteGroup alive while the Subgroup is in use.
struct Subgroup {
  const FiniteGroup* group = nullptr;
  std::vector<uint16_t> elements;

  unsigned order() const { return static_cast<unsigned>(elements.size()); }
  bool contains(unsigned g) const;
  bool contains(const Subgroup& other) const;
  bool is_abelian() const;
};

// Elements of p-power order (the identity included), ascending.
std::vector<uint16_t> p_power_order_elements(const FiniteGroup& G, long long p);

// chi_n(BG) by the centralizer recursion
//   chi_0 = 1,  chi_n(G) = sum over conjugacy classes [g] of p-power order
//                          of chi_{n-1}(C_G(g)).
// Memoizes across levels and across calls; safe for concurrent use.
class ChiBgEvaluator {
 public:
  ChiBgEvaluator(FiniteGroup G, long long p, GroupBudget budget = {});
  Integer chi(long long n);
  const FiniteGroup& group() const { return *G_; }
  long long prime() const { return p_; }

 private:
  Integer chi_subset(const std::vector<uint16_t>& H, long long n);

  std::shared_ptr<const FiniteGroup> G_;
  long long p_;
  GroupBudget budget_;
  std::mutex mutex_;
  std::map<std::pair<std::vector<uint16_t>, long long>, Integer> memo_;
};

Integer chi_bg(const FiniteGroup& G, long long p, long long n,
               const GroupBudget& budget = {});

// Independent oracle: enumerate commuting n-tuples of p-power-order elements
// and count conjugation orbits.  Exponential; guarded by budget.max_tuples.
Integer brute_force_commuting_tuples(const FiniteGroup& G, long long p,
                                     long long n,
                                     const GroupBudget& budget = {});

// All abelian subgroups, in a deterministic (lex) order.
std::vector<Subgroup> abelian_subgroups(const FiniteGroup& G,
                                        const GroupBudget& budget = {});

// Coefficients c_A with  sum over abelian B >= A of c_B = 1  for every
// abelian A; computed top-down from the maximal abelian subgroups.  Entries
// align with abelian_subgroups(G).
struct MoebiusEntry {
  Subgroup subgroup;
  Integer coefficient;
};
std::vector<MoebiusEntry> moebius_coefficients(const FiniteGroup& G,
                                               const GroupBudget& budget = {});

// Character-theoretic closed form
//   chi_n(BG) = (1/|G|) sum_A c_A [A : A_p] |A_p|^(n+1)
// as an expolynomial in n; cross-checked against chi_bg on n <= 5.
ExpoPoly hkr_chi(const FiniteGroup& G, long long p,
                 const GroupBudget& budget = {});

// #{ g : gcd(ord g, p) = 1 } / |G|; equals the extrapolation of chi_n(BG) to
// n = -1.  When the lattice budget admits G, the expolynomial route is
// computed too and asserted equal.
Rational p_typical_cardinality(const FiniteGroup& G, long long p,
                               const GroupBudget& budget = {});

}  // namespace morava
