#ifndef CUCALC_SUITE_HPP
#define CUCALC_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/cap.hpp"
#include "cucalc/model.hpp"
#include "cucalc/report.hpp"

namespace cucalc {

struct RunConfig {
  std::string model_source;
  std::vector<std::string> suites;  // axioms riesz distributivity divisibility
                                    // edwards comparison pullback grothendieck
  std::int64_t ceiling = 4;
  std::int64_t denominator = 2;
  std::int64_t search_bound = 16;
  std::string bound_literal;  // cap bound element, optional
  std::int64_t k = 2;
  std::int64_t n = 2;
  std::int64_t m = 1;
  std::string gamma = "1";
  std::string u_literal;  // optional unit element
  std::string format = "text";
  int jobs = 1;
  std::uint64_t seed = 1;
};

struct RunResult {
  std::string model;
  std::vector<CheckReport> reports;
  std::vector<ComparisonReport> comparisons;
  std::vector<std::string> lines;  // extra per-suite summary lines
  int exit_code = 0;               // 0 all hold, 1 some fails, 2 only inconclusive
};

std::vector<std::string> known_suites();

/// Executes the selected suites in declared order. Per-checker errors are
/// embedded in the result; sibling checkers still run.
RunResult run(const RunConfig& cfg);

/// Deterministic serialization: identical (config, seed) pairs produce
/// byte-identical output. Timing never enters the JSON.
std::string to_json_string(const RunConfig& cfg, const RunResult& result);
std::string to_text(const RunResult& result);

}  // namespace cucalc

#endif
