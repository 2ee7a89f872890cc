#include <doctest.h>

#include <stdexcept>

#include "morava/json_io.hpp"

using namespace morava;

TEST_CASE("group parsing: presets and explicit tables") {
  CHECK(parse_group("D4").order() == 8);
  CHECK(parse_group("C2xC4").order() == 8);
  CHECK(parse_group("He3").order() == 27);

  FiniteGroup C3 = parse_group(
      R"({"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]], "name": "Z3"})");
  CHECK(C3.order() == 3);
  CHECK(C3.name() == "Z3");
  CHECK(C3.is_abelian());

  // round trip through the serializer
  FiniteGroup Q8 = FiniteGroup::quaternion8();
  FiniteGroup back = parse_group(group_to_json(Q8));
  CHECK(back.order() == 8);
  CHECK(back.table() == Q8.table());

  CHECK_THROWS_AS(parse_group("{\"order\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_group(R"({"order": 2, "table": [[0,0],[1,1]]})"),
      std::invalid_argument);
}

TEST_CASE("space parsing") {
  SpacePtr em = parse_space(R"({"EM": {"group": [3], "deg": 2}})", 3);
  CHECK(chi(em, 3, 3) == 27);

  SpacePtr pt = parse_space("\"Point\"", 3);
  CHECK(chi(pt, 1, 3) == 1);
  CHECK(parse_space("\"Empty\"", 3)->kind() == SpaceExpr::Kind::Empty);

  SpacePtr gem = parse_space(
      R"({"GEM": [{"group": [3,9], "deg": 1}, {"group": [3], "deg": 3}]})", 3);
  CHECK(truncation_degree(gem) == 3);

  SpacePtr bg = parse_space(R"({"BG": "D4"})", 2);
  CHECK(chi(bg, 1, 2) == 5);

  SpacePtr bg2 = parse_space(
      R"({"BG": {"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}})", 3);
  CHECK(chi(bg2, 2, 3) == 9);

  // cup fiber picks up the working prime when "p" is absent
  SpacePtr cup = parse_space(R"({"CupFiber2": {"m": 2}})", 3);
  CHECK(cup->cup_p() == 3);
  SpacePtr cup7 = parse_space(R"({"CupFiber2": {"m": 2, "p": 7}})", 3);
  CHECK(cup7->cup_p() == 7);

  SpacePtr prod = parse_space(
      R"({"Product": ["Point", {"EM": {"group": [3], "deg": 1}}]})", 3);
  CHECK(chi(prod, 2, 3) == 9);

  SpacePtr push = parse_space(
      R"({"Pushout": ["Point", "Point", {"BG": "C3"}]})", 3);
  CHECK(chi(push, 2, 3) == -7);

  CHECK_THROWS_AS(parse_space(R"({"Pushout": ["Point", "Point"]})", 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_space(R"({"Banana": 1})", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("\"Pointy\"", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("{", 3), std::invalid_argument);
}

TEST_CASE("space serialization round trips") {
  SpacePtr spaces[] = {
      SpaceExpr::point(),
      SpaceExpr::empty(),
      SpaceExpr::em({3, 9}, 2),
      SpaceExpr::classifying(FiniteGroup::dihedral4()),
      SpaceExpr::cup_fiber2(2, 3),
      SpaceExpr::product(SpaceExpr::em({3}, 1), SpaceExpr::em({3}, 2)),
      SpaceExpr::pushout(SpaceExpr::point(), SpaceExpr::point(),
                         SpaceExpr::em({3}, 1)),
  };
  for (const SpacePtr& X : spaces) {
    SpacePtr back = parse_space(space_to_json(X), 3);
    CHECK(describe(back) == describe(X));
    CHECK(space_to_json(back) == space_to_json(X));
  }
}

TEST_CASE("expolynomial serialization") {
  ExpoPoly e = hkr_chi(FiniteGroup::dihedral4(), 2);
  ExpoPoly back = expoly_from_json(expoly_to_json(e));
  CHECK(back == e);
  CHECK(back.eval(3) == 92);

  ExpoPoly z = expoly_from_json(R"({"p": 3, "terms": []})");
  CHECK(z.is_zero());

  ExpoPoly manual = expoly_from_json(
      R"({"p": 3, "terms": [{"c": "-1/2", "f": [0, 1]}, {"c": "3/2", "f": [0, 2]}]})");
  CHECK(manual.eval(2) == Rational(Integer(-9), Integer(2)) +
                              Rational(Integer(3), Integer(2)) * 81);

  CHECK_THROWS_AS(expoly_from_json(R"({"terms": []})"), std::invalid_argument);
  CHECK_THROWS_AS(expoly_from_json("[]"), std::invalid_argument);
}

TEST_CASE("sequence serialization") {
  std::vector<Rational> values{1, 3, 9};
  std::vector<Rational> xbar{1, 2, 4};
  std::string js = sequence_to_json("demo", 3, values, xbar);
  CHECK(js.find("\"label\": \"demo\"") != std::string::npos);
  CHECK(js.find("\"3/1\"") != std::string::npos);

  std::string csv = sequence_to_csv(values, xbar);
  CHECK(csv == "n,chi,xbar\n0,1/1,1/1\n1,3/1,2/1\n2,9/1,4/1\n");
}

TEST_CASE("certificate and report serialization") {
  ChiSequence seq = chi_sequence(SpaceExpr::em({3}, 1), 3);
  ContinuityCertificate cert = certify_continuity(seq, 2, 4);
  std::string js = certificate_to_json(cert);
  CHECK(js.find("\"verdict\": \"pass\"") != std::string::npos);
  CHECK(js.find("\"slack\": 0") != std::string::npos);

  std::string csv = certificate_to_csv(cert);
  CHECK(csv.find("n,x,xbar,valuation,required,ok\n") == 0);
  CHECK(csv.find("2,9/1,4/1,2,2,1\n") != std::string::npos);

  ExtrapolationReport rep =
      mahler_extrapolate(seq, 2, 4, Rational(Integer(1), Integer(3)));
  std::string ejs = extrapolation_to_json(rep);
  CHECK(ejs.find("\"target\": \"1/3\"") != std::string::npos);
  CHECK(ejs.find("\"verdict\": \"pass\"") != std::string::npos);

  LambdaShiftReport lam = lambda_shift_check(SpaceExpr::em({3}, 1), 3, 2, 4);
  std::string ljs = lambda_report_to_json(lam);
  CHECK(ljs.find("\"certificate\"") != std::string::npos);
  CHECK(ljs.find("\"extrapolation\"") != std::string::npos);

  // infinite valuations serialize as "inf"
  ChiSequence c2 = chi_sequence(
      SpaceExpr::coproduct(SpaceExpr::point(), SpaceExpr::point()), 3);
  std::string cjs = certificate_to_json(certify_continuity(c2, 2, 3));
  CHECK(cjs.find("\"inf\"") != std::string::npos);
}

TEST_CASE("convergence serialization") {
  ConvergenceReport rep = resolution_convergence(bar_sequence(3), 2, 4);
  std::string js = convergence_to_json(rep);
  CHECK(js.find("\"verdict\": \"pass\"") != std::string::npos);

  std::string csv = convergence_to_csv(rep);
  CHECK(csv.find("n,x,xbar,sk,valuation\n") == 0);
  CHECK(csv.find("2,9/1,4/1,3/1,3\n") != std::string::npos);
}

TEST_CASE("series serialization") {
  TruncatedSeries s = sym_cardinality_series(3, 4);
  std::string js = series_to_json("card", s);
  CHECK(js.find("\"2/3\"") != std::string::npos);
  std::string csv = series_to_csv(s);
  CHECK(csv == "m,coefficient\n0,1/1\n1,1/1\n2,1/1\n3,2/3\n4,2/3\n");
}
