#include "morava/json_io.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace morava {

namespace {

using json = nlohmann::ordered_json;

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

json valuation_json(const Valuation& v) {
  return v.is_infinite() ? json("inf") : json(v.value());
}

json rational_json(const Rational& x) { return json(fraction_string(x)); }

json rational_list(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(rational_json(x));
  return out;
}

std::vector<unsigned> parse_factor_list(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("group factors must be a list");
  std::vector<unsigned> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned())
      throw std::invalid_argument("cyclic factor orders must be naturals");
    out.push_back(v.get<unsigned>());
  }
  return out;
}

GemFactor parse_gem_factor(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("deg"))
    throw std::invalid_argument("GEM factor needs \"group\" and \"deg\"");
  GemFactor f;
  f.invariant_factors = parse_factor_list(j.at("group"));
  if (!j.at("deg").is_number_unsigned())
    throw std::invalid_argument("\"deg\" must be a natural number");
  f.degree = j.at("deg").get<unsigned>();
  return f;
}

FiniteGroup parse_group_json(const json& j, const GroupBudget& budget) {
  if (j.is_string()) return group_preset(j.get<std::string>(), budget);
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw std::invalid_argument("group JSON needs \"order\" and \"table\"");
  unsigned order = j.at("order").get<unsigned>();
  const json& rows = j.at("table");
  if (!rows.is_array() || rows.size() != order)
    throw std::invalid_argument("group table must have `order` rows");
  std::vector<uint16_t> table;
  table.reserve(static_cast<size_t>(order) * order);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != order)
      throw std::invalid_argument("group table rows must have `order` entries");
    for (const auto& v : row) table.push_back(v.get<uint16_t>());
  }
  std::string name = j.value("name", std::string());
  return FiniteGroup::from_table(order, std::move(table), std::move(name),
                                 budget);
}

SpacePtr parse_space_json(const json& j, long long p,
                          const GroupBudget& budget) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Point") return SpaceExpr::point();
    if (s == "Empty") return SpaceExpr::empty();
    throw std::invalid_argument("unknown space literal: '" + s + "'");
  }
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("space must be a single-key object");
  const std::string key = j.begin().key();
  const json& body = j.begin().value();

  if (key == "Point") return SpaceExpr::point();
  if (key == "Empty") return SpaceExpr::empty();
  if (key == "EM") {
    GemFactor f = parse_gem_factor(body);
    return SpaceExpr::em(std::move(f.invariant_factors), f.degree);
  }
  if (key == "GEM") {
    if (!body.is_array())
      throw std::invalid_argument("\"GEM\" takes a list of factors");
    std::vector<GemFactor> factors;
    for (const auto& v : body) factors.push_back(parse_gem_factor(v));
    return SpaceExpr::gem(std::move(factors));
  }
  if (key == "BG") return SpaceExpr::classifying(parse_group_json(body, budget));
  if (key == "CupFiber2") {
    if (!body.is_object() || !body.contains("m"))
      throw std::invalid_argument("\"CupFiber2\" needs \"m\"");
    unsigned m = body.at("m").get<unsigned>();
    long long cp = body.value("p", p);
    return SpaceExpr::cup_fiber2(m, cp);
  }
  if (key == "Product" || key == "Coproduct") {
    if (!body.is_array() || body.size() < 2)
      throw std::invalid_argument("\"" + key + "\" takes at least two spaces");
    SpacePtr acc = parse_space_json(body[0], p, budget);
    for (size_t i = 1; i < body.size(); ++i) {
      SpacePtr next = parse_space_json(body[i], p, budget);
      acc = key == "Product" ? SpaceExpr::product(acc, next)
                             : SpaceExpr::coproduct(acc, next);
    }
    return acc;
  }
  if (key == "Pushout") {
    if (!body.is_array() || body.size() != 3)
      throw std::invalid_argument("\"Pushout\" takes exactly [X, Y, Z]");
    return SpaceExpr::pushout(parse_space_json(body[0], p, budget),
                              parse_space_json(body[1], p, budget),
                              parse_space_json(body[2], p, budget));
  }
  throw std::invalid_argument("unknown space constructor: '" + key + "'");
}

json space_json(const SpacePtr& X) {
  switch (X->kind()) {
    case SpaceExpr::Kind::Point:
      return json("Point");
    case SpaceExpr::Kind::Empty:
      return json("Empty");
    case SpaceExpr::Kind::Gem: {
      json factors = json::array();
      for (const auto& f : X->gem_factors()) {
        json jf;
        jf["group"] = f.invariant_factors;
        jf["deg"] = f.degree;
        factors.push_back(jf);
      }
      if (factors.size() == 1) return json{{"EM", factors[0]}};
      return json{{"GEM", factors}};
    }
    case SpaceExpr::Kind::Classifying: {
      const FiniteGroup& G = X->group();
      json rows = json::array();
      for (unsigned a = 0; a < G.order(); ++a) {
        json row = json::array();
        for (unsigned b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
        rows.push_back(row);
      }
      return json{{"BG",
                   {{"order", G.order()}, {"table", rows}, {"name", G.name()}}}};
    }
    case SpaceExpr::Kind::CupFiber2:
      return json{{"CupFiber2", {{"m", X->cup_m()}, {"p", X->cup_p()}}}};
    case SpaceExpr::Kind::Product:
      return json{{"Product", {space_json(X->child(0)), space_json(X->child(1))}}};
    case SpaceExpr::Kind::Coproduct:
      return json{
          {"Coproduct", {space_json(X->child(0)), space_json(X->child(1))}}};
    case SpaceExpr::Kind::Pushout:
      return json{{"Pushout",
                   {space_json(X->child(0)), space_json(X->child(1)),
                    space_json(X->child(2))}}};
  }
  throw std::logic_error("space_json: unhandled node kind");
}

}  // namespace

FiniteGroup parse_group(const std::string& text, const GroupBudget& budget) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos)
    throw std::invalid_argument("empty group description");
  if (text[i] == '{' || text[i] == '"')
    return parse_group_json(parse_or_throw(text), budget);
  std::string name = text.substr(i);
  while (!name.empty() && isspace(static_cast<unsigned char>(name.back())))
    name.pop_back();
  return group_preset(name, budget);
}

std::string group_to_json(const FiniteGroup& G) {
  json rows = json::array();
  for (unsigned a = 0; a < G.order(); ++a) {
    json row = json::array();
    for (unsigned b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
    rows.push_back(row);
  }
  json out;
  out["order"] = G.order();
  out["table"] = rows;
  out["name"] = G.name();
  return out.dump(2);
}

SpacePtr parse_space(const std::string& text, long long default_p,
                     const GroupBudget& budget) {
  return parse_space_json(parse_or_throw(text), default_p, budget);
}

std::string space_to_json(const SpacePtr& X) {
  if (!X) throw std::invalid_argument("space_to_json: null space");
  return space_json(X).dump(2);
}

ExpoPoly expoly_from_json(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("p") || !j.contains("terms"))
    throw std::invalid_argument("expolynomial JSON needs \"p\" and \"terms\"");
  ExpoPoly e = ExpoPoly::zero(j.at("p").get<long long>());
  for (const auto& t : j.at("terms")) {
    Rational c = parse_fraction(t.at("c").get<std::string>());
    std::vector<Integer> coef;
    for (const auto& a : t.at("f")) {
      if (a.is_string())
        coef.emplace_back(a.get<std::string>());
      else
        coef.emplace_back(a.get<long long>());
    }
    e = e + ExpoPoly::power_term(e.prime(), c, IntValuedPoly(std::move(coef)));
  }
  return e;
}

std::string expoly_to_json(const ExpoPoly& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) {
    json jt;
    jt["c"] = fraction_string(t.c);
    json coef = json::array();
    for (const auto& a : t.f.coefficients()) {
      // Numbers where they fit, decimal strings for the rare huge ones.
      if (a >= std::numeric_limits<long long>::min() &&
          a <= std::numeric_limits<long long>::max())
        coef.push_back(a.convert_to<long long>());
      else
        coef.push_back(a.str());
    }
    jt["f"] = coef;
    terms.push_back(jt);
  }
  json out;
  out["p"] = e.prime();
  out["terms"] = terms;
  return out.dump(2);
}

std::string sequence_to_json(const std::string& label, long long p,
                             const std::vector<Rational>& values,
                             const std::vector<Rational>& xbar) {
  json out;
  out["label"] = label;
  out["p"] = p;
  out["values"] = rational_list(values);
  out["inverse_transform"] = rational_list(xbar);
  return out.dump(2);
}

std::string sequence_to_csv(const std::vector<Rational>& values,
                            const std::vector<Rational>& xbar) {
  std::string out = "n,chi,xbar\n";
  for (size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(n) + "," + fraction_string(values[n]) + "," +
           (n < xbar.size() ? fraction_string(xbar[n]) : "") + "\n";
  }
  return out;
}

std::string certificate_to_json(const ContinuityCertificate& cert) {
  json out;
  out["label"] = cert.label;
  out["p"] = cert.p;
  out["l"] = cert.ell;
  out["d"] = cert.degree;
  out["N"] = cert.N;
  out["slack"] = cert.slack;
  out["verdict"] = cert.pass ? "pass" : "fail";
  if (cert.first_violation) out["first_violation"] = *cert.first_violation;
  json xbar = json::array(), vals = json::array(), req = json::array();
  for (const auto& row : cert.rows) {
    xbar.push_back(rational_json(row.xbar));
    vals.push_back(valuation_json(row.valuation));
    req.push_back(valuation_json(row.required));
  }
  out["xbar"] = xbar;
  out["valuations"] = vals;
  out["required"] = req;
  return out.dump(2);
}

std::string certificate_to_csv(const ContinuityCertificate& cert) {
  std::string out = "n,x,xbar,valuation,required,ok\n";
  for (const auto& row : cert.rows) {
    out += std::to_string(row.n) + "," + fraction_string(row.x) + "," +
           fraction_string(row.xbar) + "," + row.valuation.str() + "," +
           row.required.str() + "," + (row.ok ? "1" : "0") + "\n";
  }
  return out;
}

std::string extrapolation_to_json(const ExtrapolationReport& rep) {
  json out;
  out["label"] = rep.label;
  out["p"] = rep.p;
  out["l"] = rep.ell;
  out["d"] = rep.degree;
  out["N"] = rep.N;
  out["slack"] = rep.slack;
  out["verdict"] = rep.pass ? "pass" : "fail";
  out["partials"] = rational_list(rep.partials);
  out["limit"] = rational_json(rep.limit);
  out["guaranteed_exponent"] = valuation_json(rep.guaranteed);
  if (rep.target) {
    out["target"] = rational_json(*rep.target);
    json vals = json::array();
    for (const auto& v : rep.target_valuations)
      vals.push_back(valuation_json(v));
    out["valuations"] = vals;
  }
  return out.dump(2);
}

std::string lambda_report_to_json(const LambdaShiftReport& rep) {
  json out;
  out["label"] = rep.label;
  out["p"] = rep.p;
  out["l"] = rep.ell;
  out["target"] = rational_json(rep.target);
  out["verdict"] = rep.pass ? "pass" : "fail";
  out["certificate"] = json::parse(certificate_to_json(rep.certificate));
  out["extrapolation"] = json::parse(extrapolation_to_json(rep.extrapolation));
  return out.dump(2);
}

std::string convergence_to_json(const ConvergenceReport& rep) {
  json out;
  out["label"] = rep.label;
  out["l"] = rep.ell;
  out["d"] = rep.degree;
  out["N"] = rep.N;
  out["burn_in"] = rep.burn_in;
  out["slack"] = rep.slack;
  out["target"] = rational_json(rep.target);
  out["verdict"] = rep.pass ? "pass" : "fail";
  if (rep.first_violation) out["first_violation"] = *rep.first_violation;
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json jr;
    jr["n"] = row.n;
    jr["x"] = rational_json(row.x);
    jr["xbar"] = rational_json(row.xbar);
    jr["sk"] = rational_json(row.sk);
    jr["valuation"] = valuation_json(row.valuation);
    rows.push_back(jr);
  }
  out["rows"] = rows;
  return out.dump(2);
}

std::string convergence_to_csv(const ConvergenceReport& rep) {
  std::string out = "n,x,xbar,sk,valuation\n";
  for (const auto& row : rep.rows) {
    out += std::to_string(row.n) + "," + fraction_string(row.x) + "," +
           fraction_string(row.xbar) + "," + fraction_string(row.sk) + "," +
           row.valuation.str() + "\n";
  }
  return out;
}

std::string series_to_json(const std::string& label,
                           const TruncatedSeries& s) {
  json out;
  out["label"] = label;
  out["order"] = s.order();
  out["coefficients"] = rational_list(s.coefficients());
  return out.dump(2);
}

std::string series_to_csv(const TruncatedSeries& s) {
  std::string out = "m,coefficient\n";
  for (long long m = 0; m <= s.order(); ++m)
    out += std::to_string(m) + "," + fraction_string(s.coefficient(m)) + "\n";
  return out;
}

}  // namespace morava
