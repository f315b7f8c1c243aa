// Batch front-end: parse model descriptions, run selected checker suites,
// emit human-readable or machine-readable reports.
//
// Exit codes: 0 = all hold, 1 = some check fails, 2 = only
// inconclusive-at-cap results, 3 = usage or parse error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "cucalc/alpha.hpp"
#include "cucalc/comparison.hpp"
#include "cucalc/modeltext.hpp"
#include "cucalc/suite.hpp"

using namespace cucalc;

namespace {

std::int64_t env_default_ceiling() {
  if (const char* v = std::getenv("CU_DEFAULT_CAP")) {
    try {
      return std::stoll(v);
    } catch (...) {
    }
  }
  return 4;
}

void add_cap_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--model", cfg.model_source, "model file, builtin name, or inline text")
      ->required();
  cmd->add_option("--cap", cfg.bound_literal, "cap bound element literal");
  cmd->add_option("--ceiling", cfg.ceiling, "coordinate ceiling of the cap grid");
  cmd->add_option("--denominator", cfg.denominator, "denominator of the rational grid");
  cmd->add_option("--search-bound", cfg.search_bound, "bound for n-searches");
  cmd->add_option("--format", cfg.format, "text | json");
  cmd->add_option("--jobs", cfg.jobs, "parallel checker evaluation");
  cmd->add_option("--seed", cfg.seed, "seed for sampled property checks");
}

int emit(const RunConfig& cfg, const RunResult& res) {
  if (cfg.format == "json")
    std::cout << to_json_string(cfg, res);
  else
    std::cout << to_text(res);
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale checkers for abstract Cuntz semigroups"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.ceiling = env_default_ceiling();

  // ---- check ----
  auto* check = app.add_subcommand("check", "run checker suites against a model");
  add_cap_flags(check, cfg);
  check->add_option("--suite", cfg.suites,
                    "axioms riesz distributivity divisibility edwards comparison pullback "
                    "grothendieck")
      ->expected(-1);
  check->add_option("--k", cfg.k, "divisibility parameter k");
  check->add_option("--n", cfg.n, "divisibility parameter n");
  check->add_option("--m", cfg.m, "comparison parameter m");
  check->add_option("--gamma", cfg.gamma, "local weak comparison gamma");
  check->add_option("--u", cfg.u_literal, "unit element literal");

  // ---- alpha ----
  auto* alpha_cmd = app.add_subcommand("alpha", "evaluate the rank-realization map");
  RunConfig acfg;
  acfg.ceiling = env_default_ceiling();
  std::string f_literal;
  add_cap_flags(alpha_cmd, acfg);
  alpha_cmd->add_option("--f", f_literal, "target rank function, one value per point")
      ->required();

  // ---- rank ----
  auto* rank_cmd = app.add_subcommand("rank", "print the rank of an element");
  RunConfig rcfg;
  rcfg.ceiling = env_default_ceiling();
  std::string x_literal;
  add_cap_flags(rank_cmd, rcfg);
  rank_cmd->add_option("--x", x_literal, "element literal")->required();

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "run every suite and aggregate");
  RunConfig repcfg;
  repcfg.ceiling = env_default_ceiling();
  add_cap_flags(report_cmd, repcfg);
  report_cmd->add_option("--k", repcfg.k, "divisibility parameter k");
  report_cmd->add_option("--n", repcfg.n, "divisibility parameter n");
  report_cmd->add_option("--u", repcfg.u_literal, "unit element literal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (check->parsed()) {
      if (cfg.suites.empty()) cfg.suites = {"axioms"};
      return emit(cfg, run(cfg));
    }
    if (alpha_cmd->parsed()) {
      CuModel m = load_model(acfg.model_source);
      Cap cap(acfg.ceiling, acfg.denominator, acfg.search_bound);
      std::vector<ExtRat> vals;
      std::string cur;
      std::string t = f_literal;
      if (!t.empty() && t.front() == '(') t = t.substr(1, t.size() - 2);
      for (char c : t + ",") {
        if (c == ',') {
          vals.push_back(ExtRat::parse(cur));
          cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
          cur.push_back(c);
        }
      }
      RankFunction f = RankFunction::canonical(m, vals);
      AlphaResult a = alpha(m, f, cap);
      if (!a.value) {
        std::cout << "alpha undecided: " << a.note << "\n";
        return 2;
      }
      RealizationReport rr = check_realization(m, f, cap);
      std::cout << "alpha = " << m.literal(*a.value)
                << ", realized=" << (rr.realized ? "true" : "false");
      if (!rr.classification.empty()) std::cout << " (" << rr.classification << ")";
      std::cout << "\n";
      return 0;
    }
    if (rank_cmd->parsed()) {
      CuModel m = load_model(rcfg.model_source);
      Element x = m.parse_literal(x_literal);
      std::cout << "rank(" << m.literal(x) << ") = " << rank(m, x).str() << "\n";
      return 0;
    }
    if (report_cmd->parsed()) {
      repcfg.suites = known_suites();
      return emit(repcfg, run(repcfg));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
