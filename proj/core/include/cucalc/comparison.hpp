#ifndef CUCALC_COMPARISON_HPP
#define CUCALC_COMPARISON_HPP

#include <optional>

#include "cucalc/alpha.hpp"
#include "cucalc/functionals.hpp"
#include "cucalc/grothendieck.hpp"

namespace cucalc {

/// All comparability properties over one cap: almost unperforation,
/// strict comparison (rank domination with a gap forces order),
/// m-comparison for small m, local weak (m,gamma)-comparison, and the exact
/// radius of comparison (grid-refined; `u` is required for the last two).
ComparisonReport comparison_suite(const CuModel& m, const std::optional<Element>& u,
                                  const Cap& cap,
                                  const std::vector<std::pair<std::int64_t, ExtRat>>&
                                      extra_local_weak = {});

/// sup over normalized functionals of lambda(x), computed exactly for
/// lsc-family models and over the functional grid otherwise.
ExtRat normalized_sup(const CuModel& m, const Element& u, const Element& x);
ExtRat normalized_inf(const CuModel& m, const Element& u, const Element& x);

/// Truth pattern of the three comparability equivalence families over the
/// cap. The checker evaluates every numbered condition independently and
/// flags patterns that break an equivalence, together with the standing
/// hypothesis pattern of the model (the theorems assume the hypotheses; the
/// model is never declared wrong for breaking a conditional).
CheckReport check_supersoft_equivalences(const CuModel& m, const Element& u, const Cap& cap);

}  // namespace cucalc

#endif
