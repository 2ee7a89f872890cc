#include <doctest.h>

#include <stdexcept>

#include "morava/group.hpp"
#include "morava/series.hpp"

using namespace morava;

namespace {
Rational rat(long long num, long long den) {
  return Rational(Integer(num), Integer(den));
}
}  // namespace

TEST_CASE("truncated series ring operations") {
  TruncatedSeries one = TruncatedSeries::one(5);
  CHECK(one.order() == 5);
  CHECK(one.coefficient(0) == 1);
  CHECK(one.coefficient(5) == 0);
  CHECK_THROWS_AS(one.coefficient(6), std::out_of_range);

  TruncatedSeries x(5);
  x.set_coefficient(1, 1);
  TruncatedSeries s = one - x;         // 1 - x
  TruncatedSeries geo = s.reciprocal();
  for (long long m = 0; m <= 5; ++m) CHECK(geo.coefficient(m) == 1);
  CHECK((s * geo).coefficient(0) == 1);
  CHECK((s * geo).coefficient(3) == 0);

  TruncatedSeries sum = s + x;
  CHECK(sum.coefficient(0) == 1);
  CHECK(sum.coefficient(1) == 0);
  CHECK(s.scaled(rat(3, 2)).coefficient(1) == rat(-3, 2));

  TruncatedSeries zero(4);
  CHECK_THROWS_AS(zero.reciprocal(), std::domain_error);
  CHECK_THROWS_AS(one + zero, std::invalid_argument);  // mixed orders
}

TEST_CASE("series powers") {
  TruncatedSeries s = TruncatedSeries::one_minus_power(6, 1, 1);  // 1 - x
  TruncatedSeries inv2 = s.pow(-2);
  for (long long m = 0; m <= 6; ++m) CHECK(inv2.coefficient(m) == m + 1);

  TruncatedSeries sqrt = s.pow(rat(1, 2));
  CHECK(sqrt.coefficient(0) == 1);
  CHECK(sqrt.coefficient(1) == rat(-1, 2));
  CHECK(sqrt.coefficient(2) == rat(-1, 8));
  CHECK(sqrt.coefficient(3) == rat(-1, 16));
  // (s^(1/2))^2 = s up to truncation
  TruncatedSeries sq = sqrt * sqrt;
  for (long long m = 0; m <= 6; ++m)
    CHECK(sq.coefficient(m) == s.coefficient(m));

  TruncatedSeries two = TruncatedSeries::one(4).scaled(2);
  CHECK_THROWS_AS(two.pow(rat(1, 2)), std::domain_error);
  CHECK(two.pow(0).coefficient(0) == 1);
}

TEST_CASE("one_minus_power expands correctly") {
  TruncatedSeries a = TruncatedSeries::one_minus_power(9, 3, -4);
  TruncatedSeries b = TruncatedSeries::one_minus_power(9, 3, 4);
  TruncatedSeries prod = a * b;
  CHECK(prod.coefficient(0) == 1);
  for (long long m = 1; m <= 9; ++m) CHECK(prod.coefficient(m) == 0);
  CHECK(a.coefficient(3) == 4);
  CHECK(a.coefficient(6) == 10);
  CHECK_THROWS_AS(TruncatedSeries::one_minus_power(5, 0, 1),
                  std::domain_error);
}

TEST_CASE("subgroup counts in (Q_p/Z_p)^n") {
  // Z/p^infty has exactly one subgroup of each order
  for (long long r = 0; r <= 5; ++r) CHECK(subgroup_count_zpn(3, 1, r) == 1);
  CHECK(subgroup_count_zpn(3, 2, 0) == 1);
  CHECK(subgroup_count_zpn(3, 2, 1) == 4);   // [2 1]_3
  CHECK(subgroup_count_zpn(3, 2, 2) == 13);  // [3 2]_3
  CHECK(subgroup_count_zpn(2, 3, 2) == 35);  // [4 2]_2
}

TEST_CASE("symmetric group generating function") {
  // n = 0: chi_0 = 1 for every m
  TruncatedSeries n0 = chi_symmetric_genfun(3, 0, 8);
  for (long long m = 0; m <= 8; ++m) CHECK(n0.coefficient(m) == 1);

  // n = 1: coefficients count 3-power conjugacy classes
  TruncatedSeries n1 = chi_symmetric_genfun(3, 1, 6);
  CHECK(n1.coefficient(3) == 2);  // e, (abc)
  CHECK(n1.coefficient(6) == 3);  // e, (abc), (abc)(def)

  // n = 2: (1-x)^(-1) (1-x^3)^(-4) in low degrees
  TruncatedSeries n2 = chi_symmetric_genfun(3, 2, 6);
  CHECK(n2.coefficient(2) == 1);
  CHECK(n2.coefficient(3) == 5);
  CHECK(n2.coefficient(6) == 15);

  // coefficients match the centralizer recursion
  for (long long n = 0; n <= 2; ++n) {
    TruncatedSeries s = chi_symmetric_genfun(3, n, 5);
    for (unsigned m = 1; m <= 5; ++m)
      CHECK(s.coefficient(m) == chi_bg(FiniteGroup::symmetric(m), 3, n));
  }
}

TEST_CASE("symmetric group cardinality series") {
  TruncatedSeries s = sym_cardinality_series(3, 12);
  CHECK(s.coefficient(0) == 1);
  CHECK(s.coefficient(2) == 1);
  CHECK(s.coefficient(3) == rat(2, 3));
  CHECK(s.coefficient(4) == rat(2, 3));
  CHECK(s.coefficient(6) == rat(5, 9));
  CHECK(s.coefficient(9) == rat(40, 81));
  CHECK(s.coefficient(12) == rat(110, 243));

  for (long long m = 0; m <= 12; ++m)
    CHECK(s.coefficient(m) == sym_cardinality_product(3, m));

  // direct product formula
  CHECK(sym_cardinality_product(3, 2) == 1);
  CHECK(sym_cardinality_product(3, 3) == rat(2, 3));
  CHECK(sym_cardinality_product(3, 6) == rat(5, 9));
  CHECK(sym_cardinality_product(2, 4) == rat(3, 8));  // (1/2)(3/4)

  // and the group-theoretic count
  for (unsigned m = 1; m <= 6; ++m)
    CHECK(sym_cardinality_product(3, m) ==
          p_typical_cardinality(FiniteGroup::symmetric(m), 3));
}
