#pragma once

#include <string>
#include <vector>

#include "morava/group.hpp"
#include "morava/mahler.hpp"
#include "morava/resolution.hpp"
#include "morava/series.hpp"
#include "morava/space.hpp"

namespace morava {

// Group input: either a preset name ("C6", "D4", "Q8", "S4", "He3",
// "C2xC4") or a JSON object {"order": N, "table": [[...]], "name": "..."}.
FiniteGroup parse_group(const std::string& text,
                        const GroupBudget& budget = {});
std::string group_to_json(const FiniteGroup& G);

// Space grammar: "Point" | "Empty" | {"EM": {"group": [3,3], "deg": 2}}
// | {"GEM": [factor...]} | {"BG": <group>} | {"CupFiber2": {"m": 2, "p"?: 3}}
// | {"Product": [X, Y]} | {"Coproduct": [X, Y]} | {"Pushout": [X, Y, Z]}.
// default_p fills in the cup fiber's prime when absent.
SpacePtr parse_space(const std::string& text, long long default_p,
                     const GroupBudget& budget = {});
std::string space_to_json(const SpacePtr& X);

// {"p": int, "terms": [{"c": "num/den", "f": [a0, a1, ...]}]}
ExpoPoly expoly_from_json(const std::string& text);
std::string expoly_to_json(const ExpoPoly& e);

std::string sequence_to_json(const std::string& label, long long p,
                             const std::vector<Rational>& values,
                             const std::vector<Rational>& xbar);
std::string sequence_to_csv(const std::vector<Rational>& values,
                            const std::vector<Rational>& xbar);

std::string certificate_to_json(const ContinuityCertificate& cert);
std::string certificate_to_csv(const ContinuityCertificate& cert);
std::string extrapolation_to_json(const ExtrapolationReport& rep);
std::string lambda_report_to_json(const LambdaShiftReport& rep);

std::string convergence_to_json(const ConvergenceReport& rep);
std::string convergence_to_csv(const ConvergenceReport& rep);

std::string series_to_json(const std::string& label, const TruncatedSeries& s);
std::string series_to_csv(const TruncatedSeries& s);

}  // namespace morava
