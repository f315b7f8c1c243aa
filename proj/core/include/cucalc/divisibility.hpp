#ifndef CUCALC_DIVISIBILITY_HPP
#define CUCALC_DIVISIBILITY_HPP

#include <cstdint>
#include <optional>

#include "cucalc/cap.hpp"
#include "cucalc/model.hpp"
#include "cucalc/report.hpp"

namespace cucalc {

/// (k,n)-divisibility query. In weak mode the witness is an n-tuple
/// y_1..y_n with k*y_j <= x and x' <= sum y_j; in plain mode a single y with
/// k*y <= x and x' <= n*y. omega mode searches n up to the cap bound.
struct DivisibilityQuery {
  std::int64_t k = 2;
  std::int64_t n = 1;
  bool weak = false;
  bool omega = false;
};

/// Witness record for one x' << x instance; every inequality re-verifies by
/// direct evaluation.
struct DivisibilityCertificate {
  Element x_prime;
  std::vector<Element> witnesses;
  std::int64_t n_used = 0;
  bool strengthened = false;  // witnesses satisfy the compact-containment form
};

struct DivisibilityResult {
  CheckReport report;
  std::vector<DivisibilityCertificate> certificates;
};

DivisibilityResult is_divisible(const CuModel& m, const Element& x, const DivisibilityQuery& q,
                                const Cap& cap);

/// max{ n^r (k-r) + n^(r-1) : r = 1..k }.
std::int64_t constant_M(std::int64_t k, std::int64_t n);
/// n(M-1)+1.
std::int64_t constant_N_wedge(std::int64_t n, std::int64_t M);
/// k(M-1)+1 with M = constant_M(k,n).
std::int64_t constant_N_cugg(std::int64_t k, std::int64_t n);

/// Given x <= M*y_j for all j, asserts x <= N * meet(y_j) with
/// N = constant_N_wedge(#ys, M), and reports the minimal N' found.
CheckReport verify_wedgefull(const CuModel& m, const Element& x,
                             const std::vector<Element>& ys, std::int64_t M);

/// Precomputed hypothesis verdicts so batch runs do not re-check the model
/// per element.
struct CuggHypotheses {
  Verdict o5 = Verdict::Holds;
  Verdict weak_cancellation = Verdict::Holds;
  Verdict inf_distributive = Verdict::Holds;
};

/// Whenever x is weakly (k,n)-divisible on the cap, x must be plainly
/// (k,N)-divisible with N = constant_N_cugg(k,n); reports the minimal plain
/// N per instance and flags any excess over the bound.
CheckReport verify_cugg(const CuModel& m, const Element& x, std::int64_t k, std::int64_t n,
                        const Cap& cap, const CuggHypotheses* hyp = nullptr);

/// Soft elements: every x' << x satisfies (k+1)x' <= kx for some k. The
/// search bound is derived from the cap grid, which makes the verdict
/// conclusive on the built-in families.
CheckReport is_soft(const CuModel& m, const Element& x, const Cap& cap);

/// Softness of the saturated series sum(prefix) + inf*(last term), after
/// verifying the domination premises along the prefix.
CheckReport check_soft_sum(const CuModel& m, const std::vector<Element>& prefix, const Cap& cap);

/// First cap element z (enumeration order) that is soft, full and satisfies
/// n*z <= x; absence is a model-level finding, not an error.
std::optional<Element> find_small_soft(const CuModel& m, const Element& x, std::int64_t n,
                                       const Cap& cap);

}  // namespace cucalc

#endif
