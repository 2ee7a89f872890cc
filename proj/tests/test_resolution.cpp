#include <doctest.h>

#include <stdexcept>

#include "morava/resolution.hpp"

using namespace morava;

namespace {
Rational rat(long long num, long long den) {
  return Rational(Integer(num), Integer(den));
}
}  // namespace

TEST_CASE("skeleton cardinalities from the two formulas") {
  // bar levels of C3: x = 1, 3, 9, 27
  std::vector<Rational> sk = skeleton_cardinalities({1, 3, 9, 27});
  CHECK(sk == std::vector<Rational>{1, -1, 3, -5});

  CHECK(skeleton_cardinalities({}).empty());
  CHECK(skeleton_cardinalities({rat(5, 2)}) ==
        std::vector<Rational>{rat(5, 2)});
  // constant levels: the skeleton filtration is already stable
  CHECK(skeleton_cardinalities({7, 7, 7}) == std::vector<Rational>{7, 7, 7});
}

TEST_CASE("bar sequence") {
  SimplicialCardinalitySeq bar = bar_sequence(3);
  CHECK(bar.p == 3);
  CHECK(bar.degree == 1);
  CHECK(bar.target == rat(1, 3));
  CHECK(bar.value(0) == 1);
  CHECK(bar.value(4) == 81);

  // order 1: constant, exact at once
  SimplicialCardinalitySeq triv = bar_sequence(1);
  CHECK(triv.degree == 0);
  CHECK(triv.target == 1);
  CHECK(triv.value(5) == 1);

  // order 6 is not a prime power: no base prime, but the sequence stands
  SimplicialCardinalitySeq six = bar_sequence(6);
  CHECK(six.p == 0);
  CHECK(six.value(2) == 36);
}

TEST_CASE("cech sequence") {
  SimplicialCardinalitySeq cech = cech_sequence(Rational(10), 3);
  CHECK(cech.value(0) == 10);
  CHECK(cech.value(2) == 90);
  CHECK(cech.target == rat(10, 3));
  CHECK(cech.degree == 1);
}

TEST_CASE("iterated bar sequence") {
  SimplicialCardinalitySeq it2 = iterated_bar_sequence(3, 2);
  CHECK(it2.degree == 2);
  CHECK(it2.target == 3);  // 3^((-1)^2)
  CHECK(it2.value(3) == pow_integer(3, 9));

  SimplicialCardinalitySeq it1 = iterated_bar_sequence(3, 1);
  CHECK(it1.target == rat(1, 3));
  CHECK(it1.value(4) == 81);

  SimplicialCardinalitySeq it3 = iterated_bar_sequence(3, 3);
  CHECK(it3.target == rat(1, 3));
  CHECK(it3.value(2) == pow_integer(3, 8));

  CHECK_THROWS_AS(iterated_bar_sequence(3, 0), std::domain_error);
}

TEST_CASE("simplicial group sequences") {
  // constant simplicial group C3: f = 1
  SimplicialGroupData c3 = simplicial_group_sequences({3});
  CHECK(c3.p == 3);
  CHECK(c3.group_cardinality == 3);
  CHECK(c3.target == rat(1, 3));
  CHECK(c3.bar.degree == 1);
  CHECK(c3.bar.value(2) == 9);
  CHECK(c3.wbar.value(2) == 9);  // 3^(f(0) + f(1))

  // Moore sizes (1, 3): f(n) = n
  SimplicialGroupData shifted = simplicial_group_sequences({1, 3});
  CHECK(shifted.f.coefficients() == std::vector<Integer>{0, 1});
  CHECK(shifted.group_cardinality == rat(1, 3));  // 3^f(-1) = 3^(-1)
  CHECK(shifted.target == 3);
  CHECK(shifted.bar.degree == 2);
  CHECK(shifted.wbar.degree == 2);
  CHECK(shifted.bar.value(2) == 81);    // 3^(2 f(2)) = 3^4
  CHECK(shifted.wbar.value(2) == 3);    // 3^C(2,2) = 3^(0 + 1)
  CHECK(shifted.wbar.value(4) == 729);  // 3^C(4,2)

  // trivial everywhere
  SimplicialGroupData triv = simplicial_group_sequences({1, 1, 1});
  CHECK(triv.p == 0);
  CHECK(triv.f.is_zero());
  CHECK(triv.target == 1);
  CHECK(triv.bar.degree == 0);
  CHECK(triv.bar.value(7) == 1);

  CHECK_THROWS_AS(simplicial_group_sequences({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(simplicial_group_sequences({6}), std::invalid_argument);
  CHECK_THROWS_AS(simplicial_group_sequences({}), std::invalid_argument);
}

TEST_CASE("bar of C3 converges at the exact rate") {
  ConvergenceReport rep = resolution_convergence(bar_sequence(3), 2, 10);
  CHECK(rep.pass);
  CHECK(rep.slack == 0);
  CHECK(rep.burn_in == 1);
  const long long heads[] = {1, -1, 3, -5, 11};
  for (long long n = 0; n <= 4; ++n) CHECK(rep.rows[n].sk == heads[n]);
  for (long long n = 0; n <= 10; ++n)
    CHECK(rep.rows[n].valuation == Valuation::finite(n + 1));
}

TEST_CASE("convergence honors burn-in and monotonicity") {
  ConvergenceReport it2 =
      resolution_convergence(iterated_bar_sequence(3, 2), 2, 8);
  CHECK(it2.pass);
  CHECK(it2.burn_in == 2);

  ConvergenceReport forced =
      resolution_convergence(iterated_bar_sequence(3, 2), 2, 8, 0);
  CHECK(forced.burn_in == 0);

  // wrong ell: rejected up front, honest failure with the override
  CHECK_THROWS_AS(resolution_convergence(bar_sequence(3), 7, 8),
                  std::domain_error);
  ConvergenceReport bad =
      resolution_convergence(bar_sequence(3), 7, 8, {}, true);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.first_violation.has_value());
  CHECK(*bad.first_violation == 1);
}

TEST_CASE("slack absorbs ell in the target denominator") {
  // levels (1/2) 3^n converge to 1/6; v_2 of the target is -1
  ConvergenceReport rep =
      resolution_convergence(cech_sequence(rat(1, 2), 3), 2, 8);
  CHECK(rep.slack == 1);
  CHECK(rep.pass);
  for (long long n = 1; n <= 8; ++n)
    CHECK(rep.rows[n].valuation == Valuation::finite(n));
}

TEST_CASE("simplicial group convergence") {
  SimplicialGroupData shifted = simplicial_group_sequences({1, 3});
  ConvergenceReport bar = resolution_convergence(shifted.bar, 2, 8);
  ConvergenceReport wbar = resolution_convergence(shifted.wbar, 2, 8);
  CHECK(bar.pass);
  CHECK(wbar.pass);
  CHECK(bar.target == 3);
  CHECK(wbar.target == 3);

  SimplicialGroupData triv = simplicial_group_sequences({1, 1});
  ConvergenceReport t = resolution_convergence(triv.bar, 2, 6);
  CHECK(t.pass);  // constant 1, exact at every level
}
