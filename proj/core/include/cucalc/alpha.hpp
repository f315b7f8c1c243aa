#ifndef CUCALC_ALPHA_HPP
#define CUCALC_ALPHA_HPP

#include <optional>

#include "cucalc/functionals.hpp"

namespace cucalc {

/// Result of the rank-realization map: the supremum of the elements whose
/// rank sits strictly below f. On lsc-family models this is computed in
/// closed form per point and cross-checked against the cap supremum; on
/// models without enough joins the result can be undecided at the cap.
struct AlphaResult {
  std::optional<Element> value;
  bool inconclusive = false;
  std::string note;
};

AlphaResult alpha(const CuModel& m, const RankFunction& f, const Cap& cap);

/// The canonical rank grid {(a/b) * x-hat} used by the property checkers.
std::vector<RankFunction> rank_grid(const CuModel& m, const Cap& cap);

/// alpha is dominated by f after rank, monotone, continuous along encoded
/// chains, meet-preserving, and superadditive; all verified over the rank
/// grid.
CheckReport check_alpha_properties(const CuModel& m, const Cap& cap);

/// Whether f is realized as a rank: by alpha(f) itself, or by any cap
/// element. Failures on integer-ranked models are classified as the
/// elementary obstruction rather than model errors.
struct RealizationReport {
  CheckReport report;
  bool realized_by_alpha = false;
  bool realized = false;
  std::optional<Element> witness;
  std::string classification;  // "", "elementary obstruction"
};
RealizationReport check_realization(const CuModel& m, const RankFunction& f, const Cap& cap);

/// z is supersoft when alpha(z-hat) = z; a true result also asserts softness.
struct SupersoftResult {
  bool supersoft = false;
  bool inconclusive = false;
  std::string note;
};
SupersoftResult is_supersoft(const CuModel& m, const Element& x, const Cap& cap);

/// alpha(f + x-hat) = alpha(f) + x under the domination hypothesis
/// x-hat <= inf * f.
CheckReport check_alpha_additive(const CuModel& m, const Element& x, const RankFunction& f,
                                 const Cap& cap);

}  // namespace cucalc

#endif
