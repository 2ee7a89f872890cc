#include <doctest.h>

#include <stdexcept>

#include "morava/expoly.hpp"

using namespace morava;

TEST_CASE("integer-valued polynomial basics") {
  // n^2 = n + 2*C(n,2)
  IntValuedPoly sq = IntValuedPoly::from_values({0, 1, 4, 9});
  CHECK(sq.coefficients() == std::vector<Integer>{0, 1, 2});
  CHECK(sq.degree() == 2);
  CHECK(sq.eval(5) == 25);
  CHECK(sq.eval(-1) == 1);
  CHECK(sq.eval(-3) == 9);

  IntValuedPoly n = IntValuedPoly::binom_basis(1);
  CHECK(n * n == sq);
  CHECK((sq - sq).is_zero());
  CHECK((sq + (-sq)).is_zero());
  CHECK(sq.scaled(0).is_zero());

  CHECK(IntValuedPoly::binom_basis(2).eval(4) == 6);
  CHECK(IntValuedPoly::binom_basis(2).eval(-1) == 1);
  CHECK(IntValuedPoly::constant(7).eval(123) == 7);
}

TEST_CASE("shifted binomial basis") {
  // C(n+1, 2) evaluated against the plain formula
  IntValuedPoly f = IntValuedPoly::shifted_binom(2, 1);
  for (long long n = -3; n <= 5; ++n)
    CHECK(f.eval(n) == binomial(n + 1, 2));
  IntValuedPoly g = IntValuedPoly::shifted_binom(3, -2);
  for (long long n = -3; n <= 5; ++n)
    CHECK(g.eval(n) == binomial(n - 2, 3));
}

TEST_CASE("polynomial printing") {
  IntValuedPoly sq = IntValuedPoly::from_values({0, 1, 4, 9});
  CHECK(sq.str() == "2*C(n,2) + n");
  CHECK(IntValuedPoly().str() == "0");
  CHECK(IntValuedPoly::constant(-3).str() == "-3");
}

TEST_CASE("polynomial ordering is canonical") {
  IntValuedPoly a = IntValuedPoly::binom_basis(1);
  IntValuedPoly b = IntValuedPoly::binom_basis(2);
  CHECK(a < b);
  CHECK_FALSE(b < a);
  CHECK_FALSE(a < a);
}

TEST_CASE("expolynomial canonical form folds constants") {
  // 1 * 3^(n+2) must normalize to 9 * 3^n
  IntValuedPoly f = IntValuedPoly::binom_basis(1) + IntValuedPoly::constant(2);
  ExpoPoly e = ExpoPoly::power_term(3, 1, f);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].c == 9);
  CHECK(e.terms()[0].f.constant_term() == 0);
  CHECK(e.eval(2) == 81);

  // a pure constant exponent collapses to a constant term
  ExpoPoly c = ExpoPoly::power_term(3, 1, IntValuedPoly::constant(2));
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].f.is_zero());
  CHECK(c.eval(100) == 9);
}

TEST_CASE("expolynomial arithmetic") {
  ExpoPoly pn =
      ExpoPoly::power_term(3, 1, IntValuedPoly::binom_basis(1));  // 3^n
  ExpoPoly one = ExpoPoly::constant(3, 1);
  ExpoPoly sum = pn + one;
  ExpoPoly prod = sum * sum;  // 3^(2n) + 2*3^n + 1
  REQUIRE(prod.terms().size() == 3);
  CHECK(prod.eval(2) == 100);
  CHECK(prod.eval(0) == 4);
  CHECK((pn - pn).is_zero());
  CHECK(sum.scaled(0).is_zero());

  // cancellation across merged terms
  ExpoPoly z = pn + pn.scaled(-1);
  CHECK(z.is_zero());
  CHECK(z.eval(5) == 0);
}

TEST_CASE("expolynomial requires a prime base") {
  CHECK_THROWS_AS(ExpoPoly::zero(4), std::domain_error);
  CHECK_THROWS_AS(ExpoPoly::constant(1, Rational(1)), std::domain_error);
}

TEST_CASE("evaluation at negative arguments and extrapolation") {
  // chi_n(B D4) = (3/2) 4^n - (1/2) 2^n at p = 2, written base 2
  ExpoPoly e =
      ExpoPoly::power_term(2, Rational(Integer(3), Integer(2)),
                           IntValuedPoly::binom_basis(1).scaled(2)) +
      ExpoPoly::power_term(2, Rational(Integer(-1), Integer(2)),
                           IntValuedPoly::binom_basis(1));
  CHECK(e.eval(0) == 1);
  CHECK(e.eval(1) == 5);
  CHECK(e.eval(2) == 22);
  CHECK(e.eval(3) == 92);
  CHECK(extrapolate_minus_one(e) == Rational(Integer(1), Integer(8)));

  // p^C(n,2) extrapolates to p, since C(-1,2) = 1
  ExpoPoly gem = ExpoPoly::power_term(5, 1, IntValuedPoly::binom_basis(2));
  CHECK(extrapolate_minus_one(gem) == 5);
  // and p^C(n,3) to 1/p, since C(-1,3) = -1
  ExpoPoly gem3 = ExpoPoly::power_term(5, 1, IntValuedPoly::binom_basis(3));
  CHECK(extrapolate_minus_one(gem3) == Rational(Integer(1), Integer(5)));
}

TEST_CASE("expolynomial equality is syntactic on canonical forms") {
  ExpoPoly a = ExpoPoly::power_term(3, 2, IntValuedPoly::binom_basis(1)) +
               ExpoPoly::constant(3, 5);
  ExpoPoly b = ExpoPoly::constant(3, 5) +
               ExpoPoly::power_term(3, 2, IntValuedPoly::binom_basis(1));
  CHECK(a == b);
  ExpoPoly c = a + ExpoPoly::constant(3, 1);
  CHECK_FALSE(a == c);
}

TEST_CASE("expolynomial printing") {
  ExpoPoly e = ExpoPoly::power_term(2, Rational(Integer(3), Integer(2)),
                                    IntValuedPoly::binom_basis(1).scaled(2));
  CHECK(e.str() == "3/2 * 2^(2*n)");
  CHECK(ExpoPoly::zero(2).str() == "0");
}
