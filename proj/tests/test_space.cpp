#include <doctest.h>

#include <future>
#include <stdexcept>

#include "morava/space.hpp"

using namespace morava;

namespace {
Rational rat(long long num, long long den) {
  return Rational(Integer(num), Integer(den));
}
}  // namespace

TEST_CASE("eilenberg-maclane chi values") {
  SpacePtr X = SpaceExpr::em({3}, 2);
  CHECK(chi(X, 0, 3) == 1);
  CHECK(chi(X, 1, 3) == 1);
  CHECK(chi(X, 2, 3) == 3);
  CHECK(chi(X, 3, 3) == 27);   // 3^C(3,2)
  CHECK(chi(X, 4, 3) == 729);  // 3^C(4,2)

  SpacePtr Y = SpaceExpr::em({3}, 1);
  for (long long n = 0; n <= 6; ++n)
    CHECK(chi(Y, n, 3) == pow_integer(3, n));

  // K(C3 x C9, 1)
  SpacePtr Z = SpaceExpr::em({3, 9}, 1);
  CHECK(chi(Z, 2, 3) == 729);
}

TEST_CASE("degree-0 factors are plain sets") {
  SpacePtr S = SpaceExpr::gem({GemFactor{{6}, 0}});
  for (long long n = 0; n <= 4; ++n) CHECK(chi(S, n, 3) == 6);
  CHECK(homotopy_cardinality(S, 3) == 6);
}

TEST_CASE("gem factors away from p are rejected in positive degree") {
  SpacePtr X = SpaceExpr::em({2}, 1);
  CHECK_THROWS_AS(chi(X, 1, 3), std::domain_error);
  CHECK_THROWS_AS(homotopy_cardinality(X, 3), std::domain_error);
}

TEST_CASE("point, empty and formal combinations") {
  CHECK(chi(SpaceExpr::point(), 5, 3) == 1);
  CHECK(chi(SpaceExpr::empty(), 5, 3) == 0);

  SpacePtr BC3 = SpaceExpr::classifying(FiniteGroup::cyclic(3));
  SpacePtr P = SpaceExpr::product(BC3, SpaceExpr::em({3}, 2));
  CHECK(chi(P, 3, 3) == 27 * 27);

  SpacePtr C = SpaceExpr::coproduct(BC3, SpaceExpr::point());
  CHECK(chi(C, 2, 3) == 10);

  // pushout chi is formal and may go negative
  SpacePtr Push =
      SpaceExpr::pushout(SpaceExpr::point(), SpaceExpr::point(), BC3);
  CHECK(chi(Push, 2, 3) == rat(-7, 1));
}

TEST_CASE("classifying spaces route through the group evaluator") {
  SpacePtr B = SpaceExpr::classifying(FiniteGroup::symmetric(3));
  CHECK(chi(B, 2, 3) == 5);
  CHECK(chi(B, 2, 2) == 4);
  CHECK(homotopy_cardinality(B, 3) == rat(2, 3));
}

TEST_CASE("truncation degrees") {
  CHECK(truncation_degree(SpaceExpr::point()) == 0);
  CHECK(truncation_degree(SpaceExpr::em({3}, 3)) == 3);
  CHECK(truncation_degree(SpaceExpr::cup_fiber2(2, 3)) == 3);  // 2m - 1
  CHECK(truncation_degree(SpaceExpr::cup_fiber2(3, 5)) == 5);
  CHECK(truncation_degree(
            SpaceExpr::classifying(FiniteGroup::cyclic(3))) == 1);
  CHECK(truncation_degree(SpaceExpr::product(
            SpaceExpr::em({3}, 2), SpaceExpr::em({3}, 1))) == 2);
}

TEST_CASE("homotopy cardinality is the alternating product") {
  CHECK(homotopy_cardinality(SpaceExpr::em({9}, 2), 3) == 9);
  CHECK(homotopy_cardinality(SpaceExpr::em({3}, 1), 3) == rat(1, 3));
  CHECK(homotopy_cardinality(SpaceExpr::em({3, 9}, 3), 3) == rat(1, 27));
  CHECK(homotopy_cardinality(SpaceExpr::cup_fiber2(2, 3), 3) == 1);
  CHECK(homotopy_cardinality(
            SpaceExpr::coproduct(SpaceExpr::point(), SpaceExpr::point()), 3) ==
        2);
  // pushout: a + b - c
  CHECK(homotopy_cardinality(
            SpaceExpr::pushout(SpaceExpr::em({3}, 1), SpaceExpr::em({3}, 2),
                               SpaceExpr::point()),
            3) == rat(7, 3));
}

TEST_CASE("describe") {
  CHECK(describe(SpaceExpr::point()) == "pt");
  CHECK(describe(SpaceExpr::empty()) == "0");
  CHECK(describe(SpaceExpr::em({3}, 2)) == "K(C3,2)");
  CHECK(describe(SpaceExpr::classifying(FiniteGroup::dihedral4())) ==
        "B(D4)");
  CHECK(describe(SpaceExpr::cup_fiber2(2, 3)) == "CupFiber2(m=2,p=3)");
}

TEST_CASE("p-small validation") {
  CHECK(validate_p_small(SpaceExpr::em({9}, 2), 3).accepted);
  CHECK_FALSE(validate_p_small(SpaceExpr::em({2}, 1), 3).accepted);
  CHECK_FALSE(validate_p_small(
                  SpaceExpr::product(SpaceExpr::em({3}, 1),
                                     SpaceExpr::em({5}, 1)),
                  3)
                  .accepted);
  // a non-p classifying group is extended scope, not a rejection
  PSmallReport r = validate_p_small(
      SpaceExpr::classifying(FiniteGroup::symmetric(3)), 3);
  CHECK(r.accepted);
  CHECK_FALSE(r.notes.empty());
  CHECK_THROWS_AS(SpaceExpr::cup_fiber2(2, 2), std::domain_error);
  CHECK_THROWS_AS(SpaceExpr::cup_fiber2(0, 3), std::invalid_argument);
}

TEST_CASE("cup fiber closed form") {
  // lambda(0..4) for m = 2, p = 3
  const long long frozen[] = {1, 1, 3, 29, 2421};
  for (long long n = 0; n <= 4; ++n)
    CHECK(cup_fiber_chi(2, 3, n) == frozen[n]);
  CHECK(cup_fiber_chi(2, 3, -1) == 1);
  CHECK(cup_fiber_chi(1, 3, -1) == 1);

  SpacePtr X = SpaceExpr::cup_fiber2(2, 3);
  for (long long n = 0; n <= 4; ++n) CHECK(chi(X, n, 3) == frozen[n]);
  // the node is pinned to its own prime
  CHECK_THROWS_AS(chi(X, 1, 5), std::domain_error);
  CHECK_THROWS_AS(cup_fiber_chi(2, 2, 1), std::domain_error);
  CHECK_THROWS_AS(cup_fiber_chi(2, 3, -2), std::domain_error);
}

TEST_CASE("skew rank counts") {
  CHECK(skew_rank_count(3, 1, 3) == 26);
  CHECK(skew_rank_count(4, 2, 3) == 468);
  CHECK(skew_rank_count(2, 1, 3) == 2);
  CHECK(skew_rank_count(4, 0, 3) == 1);
  CHECK(skew_rank_count(1, 1, 3) == 0);
  // ranks partition the full space of alternating matrices
  for (unsigned n = 1; n <= 5; ++n) {
    Integer total = 0;
    for (unsigned k = 0; 2 * k <= n; ++k) total += skew_rank_count(n, k, 3);
    CHECK(total == pow_integer(3, Integer(n) * (n - 1) / 2));
  }
}

TEST_CASE("exterior algebra brute force") {
  // w ^ w lands in Lambda^4(F_3^3) = 0, so every w vanishes
  CHECK(s_count_brute(2, 2, 3, 3) == 27);
  CHECK(s_count_brute(2, 2, 4, 3) == 261);
  // m*d > n forces w^m = 0 outright
  CHECK(s_count_brute(3, 2, 5, 3) == pow_integer(3, 10));
  GroupBudget tiny;
  tiny.max_tuples = 100;
  CHECK_THROWS_AS(s_count_brute(2, 2, 8, 3, tiny), budget_error);
}

TEST_CASE("naive loop-cardinality guess") {
  SpacePtr X = SpaceExpr::em({3}, 1);
  for (long long n = 1; n <= 5; ++n) CHECK(ofun(X, n) == rat(1, 3));
  // n = 0 recovers the alternating product
  CHECK(ofun(SpaceExpr::em({3}, 2), 0) == 3);
  CHECK(ofun(SpaceExpr::em({3}, 2), 2) == rat(1, 3));
  CHECK_THROWS_AS(ofun(SpaceExpr::classifying(FiniteGroup::cyclic(3)), 1),
                  std::domain_error);
}

TEST_CASE("chi sequences carry degree and denominator bound") {
  ChiSequence em = chi_sequence(SpaceExpr::em({3}, 2), 3);
  CHECK(em.p == 3);
  CHECK(em.degree == 2);
  CHECK(em.denominator_bound == 1);
  CHECK(em.value(3) == 27);

  ChiSequence bs3 = chi_sequence(
      SpaceExpr::classifying(FiniteGroup::symmetric(3)), 3);
  CHECK(bs3.degree == 1);
  CHECK(bs3.denominator_bound == 6);

  ChiSequence grp = chi_sequence_for_group(FiniteGroup::symmetric(3), 3);
  CHECK(grp.denominator_bound == 6);
  CHECK(grp.value(2) == 5);

  ChiSequence he3 = chi_sequence_for_group(FiniteGroup::heisenberg3(), 3);
  CHECK(he3.denominator_bound == 1);  // p-group: no slack

  ExpoPoly e = hkr_chi(FiniteGroup::symmetric(3), 3);
  ChiSequence viae = chi_sequence(e, 1, "closed form");
  CHECK(viae.denominator_bound == 2);  // lcm of term denominators
  CHECK(viae.value(2) == 5);
}

TEST_CASE("chi caches are shared and thread safe") {
  SpacePtr shared = SpaceExpr::product(
      SpaceExpr::classifying(FiniteGroup::heisenberg3()),
      SpaceExpr::em({3}, 2));
  std::vector<std::future<Rational>> futures;
  for (int i = 0; i < 4; ++i)
    futures.push_back(std::async(std::launch::async,
                                 [shared] { return chi(shared, 8, 3); }));
  Rational first = futures[0].get();
  for (int i = 1; i < 4; ++i) CHECK(futures[i].get() == first);
  CHECK(first == chi(shared, 8, 3));
}
