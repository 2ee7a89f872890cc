// morava: exact Morava-Euler characteristic sequences for pi-finite p-spaces
// and finite groups, with l-adic continuity certificates, extrapolation to
// n = -1, and resolution convergence tables.  JSON is the canonical output;
// CSV is a tabular projection where one exists.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "morava/json_io.hpp"
#include "morava/verify.hpp"

using json = nlohmann::ordered_json;
using namespace morava;

namespace {

// Exit codes: 0 ok, 1 a report failed, 2 bad input, 3 budget exceeded.
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct RunConfig {
  long long p = 3;
  long long ell = 2;
  long long N = 12;
  unsigned long long budget = 0;  // 0: library default
  std::string format = "json";
  unsigned seed = 20260823;
  bool allow_any_ell = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_ell) {
  cmd->add_option("--p", cfg.p, "working prime")->capture_default_str();
  if (with_ell)
    cmd->add_option("--l", cfg.ell, "valuation prime, must divide p-1")
        ->capture_default_str();
  cmd->add_option("--budget", cfg.budget, "enumeration cap for oracles")
      ->envname("CC_BUDGET");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  if (with_ell)
    cmd->add_flag("--allow-any-l", cfg.allow_any_ell,
                  "accept l that does not divide p-1 (continuity may fail)");
}

GroupBudget make_budget(const RunConfig& cfg) {
  GroupBudget b;
  if (cfg.budget != 0) b.max_tuples = cfg.budget;
  return b;
}

// --space / --group accept inline text or a path to a UTF-8 file.
std::string slurp_arg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// parse_space wants JSON; let bare words like Point pass as JSON strings.
std::string as_space_json(const std::string& text) {
  std::string t = text;
  size_t a = t.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return t;
  if (t[a] != '{' && t[a] != '"') return "\"" + t.substr(a) + "\"";
  return t;
}

int cmd_chi(const RunConfig& cfg, const std::string& space_arg, long long n) {
  SpacePtr X = parse_space(as_space_json(slurp_arg(space_arg)), cfg.p,
                           make_budget(cfg));
  Rational v = chi(X, n, cfg.p);
  if (cfg.format == "csv") {
    std::cout << "n,chi\n" << n << "," << fraction_string(v) << "\n";
  } else {
    json out;
    out["space"] = describe(X);
    out["p"] = cfg.p;
    out["n"] = n;
    out["chi"] = fraction_string(v);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_sequence(const RunConfig& cfg, const std::string& space_arg) {
  SpacePtr X = parse_space(as_space_json(slurp_arg(space_arg)), cfg.p,
                           make_budget(cfg));
  ChiSequence seq = chi_sequence(X, cfg.p);
  std::vector<Rational> values;
  for (long long n = 0; n <= cfg.N; ++n) values.push_back(seq.value(n));
  std::vector<Rational> xbar = inverse_binomial_transform(values);
  if (cfg.format == "csv")
    std::cout << sequence_to_csv(values, xbar);
  else
    std::cout << sequence_to_json(seq.label, cfg.p, values, xbar) << "\n";
  return 0;
}

int cmd_extrapolate(const RunConfig& cfg, const std::string& space_arg) {
  SpacePtr X = parse_space(as_space_json(slurp_arg(space_arg)), cfg.p,
                           make_budget(cfg));
  LambdaShiftReport rep =
      lambda_shift_check(X, cfg.p, cfg.ell, cfg.N, cfg.allow_any_ell);
  if (cfg.format == "csv")
    std::cout << certificate_to_csv(rep.certificate);
  else
    std::cout << lambda_report_to_json(rep) << "\n";
  return rep.pass ? 0 : kExitFail;
}

int cmd_group_chi(const RunConfig& cfg, const std::string& group_arg,
                  long long table_N) {
  GroupBudget budget = make_budget(cfg);
  FiniteGroup G = parse_group(slurp_arg(group_arg), budget);

  std::vector<Integer> table;
  for (long long n = 0; n <= table_N; ++n)
    table.push_back(chi_bg(G, cfg.p, n, budget));

  // Independent oracle on the levels the tuple budget admits.
  size_t P = p_power_order_elements(G, cfg.p).size();
  long long oracle_levels = 0;
  double tuples = 1;
  for (long long n = 1; n <= std::min<long long>(table_N, 4); ++n) {
    tuples *= static_cast<double>(P);
    if (tuples > static_cast<double>(budget.max_tuples)) break;
    Integer brute = brute_force_commuting_tuples(G, cfg.p, n, budget);
    if (brute != table[static_cast<size_t>(n)])
      throw std::logic_error("oracle mismatch at n=" + std::to_string(n));
    oracle_levels = n;
  }

  Rational card = p_typical_cardinality(G, cfg.p, budget);

  bool lattice_ok = G.order() <= budget.lattice_max_order;
  if (cfg.format == "csv") {
    std::cout << "n,chi\n";
    for (long long n = 0; n <= table_N; ++n)
      std::cout << n << "," << table[static_cast<size_t>(n)].str() << "\n";
    return 0;
  }

  json out;
  out["group"] = G.name();
  out["order"] = G.order();
  out["p"] = cfg.p;
  out["budget"] = budget.max_tuples;
  json rows = json::array();
  for (long long n = 0; n <= table_N; ++n) {
    json r;
    r["n"] = n;
    r["chi"] = table[static_cast<size_t>(n)].str();
    rows.push_back(r);
  }
  out["table"] = rows;
  out["oracle_levels"] = oracle_levels;
  if (lattice_ok) {
    ExpoPoly e = hkr_chi(G, cfg.p, budget);
    out["closed_form"] = e.str();
    out["expolynomial"] = json::parse(expoly_to_json(e));
    out["extrapolation"] = fraction_string(extrapolate_minus_one(e));
  } else {
    out["closed_form"] = nullptr;
    out["note"] = "order exceeds the abelian-lattice budget; table only";
  }
  out["p_typical_cardinality"] = fraction_string(card);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sym(const RunConfig& cfg, long long n, long long M) {
  TruncatedSeries s = chi_symmetric_genfun(cfg.p, n, M);
  std::string label =
      "chi_" + std::to_string(n) + "(B Sigma_m), p=" + std::to_string(cfg.p);
  if (cfg.format == "csv")
    std::cout << series_to_csv(s);
  else
    std::cout << series_to_json(label, s) << "\n";
  return 0;
}

int cmd_sym_card(const RunConfig& cfg, long long M) {
  TruncatedSeries s = sym_cardinality_series(cfg.p, M);
  for (long long m = 0; m <= M; ++m)
    if (s.coefficient(m) != sym_cardinality_product(cfg.p, m))
      throw std::logic_error("series/product mismatch at m=" +
                             std::to_string(m));
  std::string label = "|B Sigma_m|_" + std::to_string(cfg.p);
  if (cfg.format == "csv")
    std::cout << series_to_csv(s);
  else
    std::cout << series_to_json(label, s) << "\n";
  return 0;
}

int cmd_resolve(const RunConfig& cfg, const std::string& kind,
                unsigned long long g, const std::string& card_x, long long d,
                std::vector<unsigned long long> moore,
                long long burn_in) {
  SimplicialCardinalitySeq seq;
  if (kind == "bar") {
    seq = bar_sequence(g);
  } else if (kind == "cech") {
    seq = cech_sequence(parse_fraction(card_x), g);
  } else if (kind == "iterbar") {
    seq = iterated_bar_sequence(g, d);
  } else if (kind == "simpgroup" || kind == "wbar") {
    if (moore.empty())
      throw std::invalid_argument("--moore is required for " + kind);
    SimplicialGroupData data = simplicial_group_sequences(moore);
    seq = (kind == "wbar") ? data.wbar : data.bar;
  } else {
    throw std::invalid_argument("unknown resolution kind: " + kind);
  }

  std::optional<long long> burn;
  if (burn_in >= 0) burn = burn_in;
  ConvergenceReport rep =
      resolution_convergence(seq, cfg.ell, cfg.N, burn, cfg.allow_any_ell);
  if (cfg.format == "csv")
    std::cout << convergence_to_csv(rep);
  else
    std::cout << convergence_to_json(rep) << "\n";
  return rep.pass ? 0 : kExitFail;
}

int cmd_verify_all(const RunConfig& cfg) {
  VerifySummary summary = run_verification(std::cout, cfg.seed);
  int failures = 0;
  for (const auto& r : summary.results)
    if (!r.pass) ++failures;
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Morava-Euler characteristic sequences, continuity certificates "
      "and -1 extrapolation for pi-finite p-spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string space_arg, group_arg, kind, card_x = "1/1";
  long long n = 0, table_N = 8, iter_d = 2, burn_in = -1, M = 12;
  std::vector<unsigned long long> moore;
  unsigned long long g = 3;

  auto* c_chi = app.add_subcommand("chi", "chi_n(X) at one index");
  c_chi->add_option("--space", space_arg, "space expression (JSON or file)")
      ->required();
  c_chi->add_option("--n", n, "index")->required();
  add_common(c_chi, cfg, false);

  auto* c_seq =
      app.add_subcommand("sequence", "lambda_X(0..N) and its differences");
  c_seq->add_option("--space", space_arg, "space expression (JSON or file)")
      ->required();
  c_seq->add_option("--N", cfg.N, "max index")->capture_default_str();
  add_common(c_seq, cfg, false);

  auto* c_ext = app.add_subcommand(
      "extrapolate", "continuity certificate and extrapolation to n = -1");
  c_ext->add_option("--space", space_arg, "space expression (JSON or file)")
      ->required();
  c_ext->add_option("--N", cfg.N, "max index")->capture_default_str();
  add_common(c_ext, cfg, true);

  auto* c_grp = app.add_subcommand(
      "group-chi", "chi_n(BG) table, closed form and oracle cross-check");
  c_grp->add_option("--group", group_arg, "preset name or JSON table")
      ->required();
  c_grp->add_option("--N", table_N, "table depth")->capture_default_str();
  add_common(c_grp, cfg, false);

  auto* c_sym =
      app.add_subcommand("sym", "generating function sum_m chi_n(B Sigma_m) x^m");
  c_sym->add_option("--n", n, "chi index")->required();
  c_sym->add_option("--M", M, "series truncation order")->capture_default_str();
  add_common(c_sym, cfg, false);

  auto* c_card = app.add_subcommand(
      "sym-card", "cardinality series sum_m |B Sigma_m|_p x^m");
  c_card->add_option("--M", M, "series truncation order")
      ->capture_default_str();
  add_common(c_card, cfg, false);

  auto* c_res = app.add_subcommand(
      "resolve", "skeleton cardinality table and convergence report");
  c_res->add_option("--kind", kind, "bar|cech|iterbar|simpgroup|wbar")
      ->required()
      ->check(CLI::IsMember({"bar", "cech", "iterbar", "simpgroup", "wbar"}));
  c_res->add_option("--g", g, "group order (bar, cech, iterbar)")
      ->capture_default_str();
  c_res->add_option("--cardX", card_x, "total space cardinality (cech)")
      ->capture_default_str();
  c_res->add_option("--d", iter_d, "iteration depth (iterbar)")
      ->capture_default_str();
  c_res->add_option("--moore", moore,
                    "Moore complex sizes p^(m_k) (simpgroup, wbar)")
      ->delimiter(',');
  c_res->add_option("--burn-in", burn_in,
                    "first degree held to the bound (default: d)");
  c_res->add_option("--N", cfg.N, "max degree")->capture_default_str();
  add_common(c_res, cfg, true);

  auto* c_ver =
      app.add_subcommand("verify-all", "run the full acceptance matrix");
  c_ver->add_option("--seed", cfg.seed, "seed for randomized sweeps")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_chi->parsed()) return cmd_chi(cfg, space_arg, n);
    if (c_seq->parsed()) return cmd_sequence(cfg, space_arg);
    if (c_ext->parsed()) return cmd_extrapolate(cfg, space_arg);
    if (c_grp->parsed()) return cmd_group_chi(cfg, group_arg, table_N);
    if (c_sym->parsed()) return cmd_sym(cfg, n, M);
    if (c_card->parsed()) return cmd_sym_card(cfg, M);
    if (c_res->parsed())
      return cmd_resolve(cfg, kind, g, card_x, iter_d, moore, burn_in);
    if (c_ver->parsed()) return cmd_verify_all(cfg);
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
