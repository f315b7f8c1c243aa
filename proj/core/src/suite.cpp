#include "cucalc/suite.hpp"

#include <functional>
#include <future>
#include <sstream>

#include <json.hpp>

#include "cucalc/axioms.hpp"
#include "cucalc/comparison.hpp"
#include "cucalc/divisibility.hpp"
#include "cucalc/grothendieck.hpp"
#include "cucalc/modeltext.hpp"

namespace cucalc {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> known_suites() {
  return {"axioms",   "riesz",      "distributivity", "divisibility",
          "edwards",  "comparison", "pullback",       "grothendieck"};
}

namespace {

Cap cap_from(const RunConfig& cfg, const CuModel& m) {
  Cap cap(cfg.ceiling, cfg.denominator, cfg.search_bound);
  if (!cfg.bound_literal.empty()) cap.bound = m.parse_literal(cfg.bound_literal);
  return cap;
}

Element default_unit(const CuModel& m) {
  switch (m.kind()) {
    case ModelKind::Lsc: {
      auto& lsc = dynamic_cast<const LscModel&>(m.impl());
      std::vector<Scalar> v;
      for (auto k : lsc.kinds())
        v.push_back(k == ScalarKind::ZCu ? Scalar::zcu_compact(1)
                                         : Scalar::parse(k, "1"));
      return lsc.from_values(std::move(v));
    }
    case ModelKind::Torsion:
      return dynamic_cast<const TorsionModel&>(m.impl()).gen_e();
    default:
      break;
  }
  throw std::invalid_argument("no default unit for this model; pass --u");
}

void run_axioms(const CuModel& m, const Cap& cap, std::uint64_t seed, int jobs, RunResult& out) {
  std::vector<std::function<CheckReport()>> tasks = {
      [&] { return check_O1(m, cap); },
      [&] { return check_O2(m, cap); },
      [&] { return check_O3(m, cap); },
      [&] { return check_O4(m, cap, 2'000'000, seed); },
      [&] { return check_O5(m, cap); },
      [&] { return check_O6plus(m, cap); },
      [&] { return check_weak_cancellation(m, cap); },
  };
  if (jobs > 1) {
    std::vector<std::future<CheckReport>> fut;
    for (auto& t : tasks) fut.push_back(std::async(std::launch::async, t));
    for (auto& f : fut) out.reports.push_back(f.get());
  } else {
    for (auto& t : tasks) out.reports.push_back(t());
  }
}

void run_divisibility(const CuModel& m, const Cap& cap, std::int64_t k, std::int64_t n,
                      RunResult& out) {
  std::ostringstream os;
  os << "constants: M(" << k << "," << n << ") = " << constant_M(k, n) << ", N = "
     << constant_N_cugg(k, n);
  out.lines.push_back(os.str());

  CuggHypotheses hyp;
  hyp.o5 = check_O5(m, cap).verdict;
  hyp.weak_cancellation = check_weak_cancellation(m, cap).verdict;
  hyp.inf_distributive = check_inf_distributivity(m, cap).verdict;

  CheckReport agg{"cugg-suite", m.describe()};
  agg.notes.push_back("hypotheses: O5 " + to_string(hyp.o5) + ", weak cancellation " +
                      to_string(hyp.weak_cancellation) + ", inf-distributivity " +
                      to_string(hyp.inf_distributive));
  std::int64_t worst = 0;
  Universe uni = Universe::build(m, cap);
  for (const Element& x : uni.elems) {
    CheckReport r = verify_cugg(m, x, k, n, cap, &hyp);
    agg.tuples_examined += r.tuples_examined;
    for (auto& c : r.counterexamples) agg.fail(c);
    for (auto& note : r.notes)
      if (auto pos = note.find("minimal plain N = "); pos != std::string::npos)
        worst = std::max<std::int64_t>(worst, std::stoll(note.substr(pos + 18)));
  }
  agg.notes.push_back("worst minimal plain N over the cap: " + std::to_string(worst) +
                      " (bound " + std::to_string(constant_N_cugg(k, n)) + ")");
  out.reports.push_back(std::move(agg));
}

void run_edwards(const CuModel& m, const Cap& cap, RunResult& out) {
  CheckReport agg{"edwards-suite", m.describe()};
  auto grid = functional_grid(m, cap);
  for (const auto& lambda : grid) {
    CheckReport r = check_edwards(m, lambda, cap);
    agg.tuples_examined += r.tuples_examined;
    if (!r.holds()) {
      for (auto& c : r.counterexamples) {
        c.bindings.emplace_back("lambda", lambda.str());
        agg.fail(c);
      }
      if (agg.counterexamples.size() > 20) break;
    }
  }
  agg.notes.push_back(std::to_string(grid.size()) + " grid functionals checked");
  out.reports.push_back(std::move(agg));
}

void run_pullback(const CuModel& m, const Cap& cap, RunResult& out) {
  auto lsc = dynamic_cast<const LscModel*>(&m.impl());
  if (!lsc) {
    CheckReport r{"pullback", m.describe()};
    r.notes.push_back("pullback suite requires an lsc-family model");
    r.verdict = Verdict::InconclusiveAtCap;
    out.reports.push_back(std::move(r));
    return;
  }
  auto ups = lsc->poset().up_sets();
  for (auto mi : ups)
    for (auto mj : ups) {
      Ideal I = ideal_from_open(m, mi);
      Ideal J = ideal_from_open(m, mj);
      out.reports.push_back(pullback_check(m, I, J, cap));
    }
}

void run_riesz(const CuModel& m, const Cap& cap, RunResult& out) {
  out.reports.push_back(check_riesz(m, cap));
  // pairwise infima existence on the cap
  CheckReport inf{"infima", m.describe()};
  Universe uni = Universe::build(m, cap);
  for (std::size_t i = 0; i < uni.size(); ++i)
    for (std::size_t j = i; j < uni.size(); ++j) {
      ++inf.tuples_examined;
      if (!m.infimum(uni.elems[i], uni.elems[j])) {
        Finding f;
        f.bindings.emplace_back("x", m.literal(uni.elems[i]));
        f.bindings.emplace_back("y", m.literal(uni.elems[j]));
        f.detail = "no greatest lower bound";
        inf.fail(std::move(f));
        if (inf.counterexamples.size() > 10) break;
      }
    }
  out.reports.push_back(std::move(inf));
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult out;
  CuModel m = load_model(cfg.model_source);
  out.model = m.describe();
  Cap cap = cap_from(cfg, m);

  std::optional<Element> u;
  if (!cfg.u_literal.empty()) u = m.parse_literal(cfg.u_literal);

  for (const std::string& s : cfg.suites) {
    try {
      if (s == "axioms") {
        run_axioms(m, cap, cfg.seed, cfg.jobs, out);
      } else if (s == "riesz") {
        run_riesz(m, cap, out);
      } else if (s == "distributivity") {
        out.reports.push_back(check_inf_distributivity(m, cap, 2'000'000, cfg.seed));
      } else if (s == "divisibility") {
        run_divisibility(m, cap, cfg.k, cfg.n, out);
      } else if (s == "edwards") {
        run_edwards(m, cap, out);
      } else if (s == "pullback") {
        run_pullback(m, cap, out);
      } else if (s == "comparison") {
        Element unit = u ? *u : default_unit(m);
        std::vector<std::pair<std::int64_t, ExtRat>> extra;
        if (cfg.m != 1 || cfg.gamma != "1") extra.push_back({cfg.m, ExtRat::parse(cfg.gamma)});
        out.comparisons.push_back(comparison_suite(m, unit, cap, extra));
        auto cone = dimension_function_cone(m, unit, cap);
        std::ostringstream os;
        if (cone.supported) {
          os << "dimension-function cone: " << cone.vertices.size()
             << " extreme points, simplex = " << (cone.simplex ? "true" : "false");
        } else {
          os << "dimension-function cone unsupported: " << cone.reason;
        }
        out.lines.push_back(os.str());
      } else if (s == "grothendieck") {
        Element unit = u ? *u : default_unit(m);
        out.reports.push_back(grothendieck_interpolation(m, unit, cap));
      } else {
        CheckReport r{s, out.model};
        r.verdict = Verdict::InconclusiveAtCap;
        r.notes.push_back("unknown suite name");
        out.reports.push_back(std::move(r));
      }
    } catch (const std::exception& e) {
      CheckReport r{s, out.model};
      r.verdict = Verdict::InconclusiveAtCap;
      r.notes.push_back(std::string("suite error: ") + e.what());
      out.reports.push_back(std::move(r));
    }
  }

  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : out.reports) {
    if (r.verdict == Verdict::Fails) any_fail = true;
    if (r.verdict == Verdict::InconclusiveAtCap) any_inconclusive = true;
  }
  for (const auto& c : out.comparisons) {
    if (c.almost_unperforated == Verdict::Fails || c.strict_comparison == Verdict::Fails)
      any_fail = true;
  }
  out.exit_code = any_fail ? 1 : (any_inconclusive ? 2 : 0);
  return out;
}

namespace {
ordered_json finding_json(const Finding& f) {
  ordered_json j;
  ordered_json b = ordered_json::array();
  for (const auto& [k, v] : f.bindings) b.push_back(ordered_json::array({k, v}));
  j["bindings"] = b;
  j["detail"] = f.detail;
  return j;
}

ordered_json report_json(const CheckReport& r) {
  ordered_json j;
  j["checker"] = r.checker;
  j["model"] = r.model;
  j["verdict"] = to_string(r.verdict);
  ordered_json cx = ordered_json::array();
  for (const auto& c : r.counterexamples) cx.push_back(finding_json(c));
  j["counterexamples"] = cx;
  ordered_json wt = ordered_json::array();
  for (const auto& w : r.witnesses) wt.push_back(finding_json(w));
  j["witnesses"] = wt;
  j["notes"] = r.notes;
  j["tuples_examined"] = r.tuples_examined;
  return j;
}

ordered_json comparison_json(const ComparisonReport& c) {
  ordered_json j;
  j["model"] = c.model;
  j["almost_unperforated"] = to_string(c.almost_unperforated);
  j["strict_comparison"] = to_string(c.strict_comparison);
  ordered_json mc = ordered_json::array();
  for (auto& [m, v] : c.m_comparison) mc.push_back(ordered_json::array({m, to_string(v)}));
  j["m_comparison"] = mc;
  j["local_weak"] = c.local_weak;
  j["radius_of_comparison"] = c.radius_of_comparison;
  j["radius_exact"] = c.radius_exact;
  ordered_json fx = ordered_json::array();
  for (const auto& f : c.findings) fx.push_back(finding_json(f));
  j["findings"] = fx;
  j["notes"] = c.notes;
  return j;
}
}  // namespace

std::string to_json_string(const RunConfig& cfg, const RunResult& result) {
  ordered_json j;
  j["model"] = result.model;
  j["config"]["suites"] = cfg.suites;
  j["config"]["ceiling"] = cfg.ceiling;
  j["config"]["denominator"] = cfg.denominator;
  j["config"]["search_bound"] = cfg.search_bound;
  j["config"]["k"] = cfg.k;
  j["config"]["n"] = cfg.n;
  j["config"]["seed"] = cfg.seed;
  ordered_json reports = ordered_json::array();
  for (const auto& r : result.reports) reports.push_back(report_json(r));
  j["reports"] = reports;
  ordered_json comps = ordered_json::array();
  for (const auto& c : result.comparisons) comps.push_back(comparison_json(c));
  j["comparisons"] = comps;
  j["summary_lines"] = result.lines;
  j["exit_code"] = result.exit_code;
  return j.dump(2) + "\n";
}

std::string to_text(const RunResult& result) {
  std::ostringstream os;
  os << "model: " << result.model << "\n";
  for (const auto& line : result.lines) os << line << "\n";
  for (const auto& r : result.reports) {
    os << r.checker << ": " << to_string(r.verdict) << "  (" << r.tuples_examined
       << " tuples";
    if (r.elapsed_seconds > 0) os << ", " << r.elapsed_seconds << "s";
    os << ")\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    std::size_t shown = 0;
    for (const auto& c : r.counterexamples) {
      os << "  counterexample:";
      for (const auto& [k, v] : c.bindings) os << " " << k << "=" << v;
      os << "  " << c.detail << "\n";
      if (++shown >= 5) {
        if (r.counterexamples.size() > shown)
          os << "  ... " << (r.counterexamples.size() - shown) << " more\n";
        break;
      }
    }
    for (const auto& w : r.witnesses) {
      os << "  witness:";
      for (const auto& [k, v] : w.bindings) os << " " << k << "=" << v;
      os << "\n";
    }
  }
  for (const auto& c : result.comparisons) {
    os << "comparison: almost_unperforated=" << to_string(c.almost_unperforated)
       << " strict_comparison=" << to_string(c.strict_comparison)
       << " radius=" << c.radius_of_comparison << (c.radius_exact ? " (exact)" : "") << "\n";
    for (auto& [m, v] : c.m_comparison)
      os << "  " << m << "-comparison: " << to_string(v) << "\n";
    for (const auto& lw : c.local_weak) os << "  local weak " << lw << "\n";
    for (const auto& n : c.notes) os << "  note: " << n << "\n";
    for (const auto& f : c.findings) {
      os << "  finding:";
      for (const auto& [k, v] : f.bindings) os << " " << k << "=" << v;
      os << "  " << f.detail << "\n";
    }
  }
  os << "exit: " << result.exit_code << "\n";
  return os.str();
}

}  // namespace cucalc
