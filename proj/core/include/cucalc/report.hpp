#ifndef CUCALC_REPORT_HPP
#define CUCALC_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cucalc {

/// Outcome vocabulary for bounded-exhaustive checks. `Fails` always comes
/// with at least one counterexample that re-verifies under direct
/// evaluation; `InconclusiveAtCap` means some tuple could not be decided
/// inside the enumeration window (never silently treated as a pass).
enum class Verdict { Holds, Fails, InconclusiveAtCap };

std::string to_string(Verdict v);

/// One quantifier tuple that violated (or could not decide) a property.
/// Bindings are (variable name, element literal) pairs in quantifier order.
struct Finding {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;
};

struct CheckReport {
  std::string checker;
  std::string model;
  Verdict verdict = Verdict::Holds;
  std::vector<Finding> counterexamples;  // enumeration order
  std::vector<Finding> witnesses;        // first few constructed witnesses
  std::vector<std::string> notes;        // hypothesis patterns, conventions
  std::uint64_t tuples_examined = 0;
  double elapsed_seconds = 0;            // text output only, never serialized

  void fail(Finding f) {
    verdict = Verdict::Fails;
    counterexamples.push_back(std::move(f));
  }
  void inconclusive(Finding f) {
    if (verdict != Verdict::Fails) verdict = Verdict::InconclusiveAtCap;
    counterexamples.push_back(std::move(f));
  }
  void witness(Finding f, std::size_t keep = 5) {
    if (witnesses.size() < keep) witnesses.push_back(std::move(f));
  }
  bool holds() const { return verdict == Verdict::Holds; }
};

/// Aggregated comparability verdicts for one model/cap.
struct ComparisonReport {
  std::string model;
  Verdict almost_unperforated = Verdict::Holds;
  Verdict strict_comparison = Verdict::Holds;
  std::vector<std::pair<std::int64_t, Verdict>> m_comparison;
  std::vector<std::string> local_weak;  // "(m,gamma) -> verdict" lines
  bool radius_exact = false;
  std::string radius_of_comparison;     // exact rational, "inf", or "<= r (grid)"
  std::vector<Finding> findings;
  std::vector<std::string> notes;
};

}  // namespace cucalc

#endif
