#ifndef CUCALC_AXIOMS_HPP
#define CUCALC_AXIOMS_HPP

#include <cstdint>

#include "cucalc/cap.hpp"
#include "cucalc/model.hpp"
#include "cucalc/report.hpp"

namespace cucalc {

/// Shared enumeration context for the bounded-exhaustive checkers: the cap
/// window, its precomputed order matrix, and the compact-containment pairs.
struct Universe {
  CuModel model;
  Cap cap;
  std::vector<Element> elems;
  std::vector<char> leq;                                    // n*n
  std::vector<std::pair<std::size_t, std::size_t>> wb;      // (x', x) with x' << x
  std::vector<std::vector<std::size_t>> below;              // below[i] = {j : ej <= ei}

  static Universe build(const CuModel& m, const Cap& cap);
  std::size_t size() const { return elems.size(); }
  bool le(std::size_t i, std::size_t j) const { return leq[i * elems.size() + j]; }
};

// Order axioms: suprema of chains, compact approximation, compatibility of
// compact containment and suprema with addition, almost algebraic order, and
// the Riesz-type refinement with interpolated summands.
CheckReport check_O1(const CuModel& m, const Cap& cap);
CheckReport check_O2(const CuModel& m, const Cap& cap);
CheckReport check_O3(const CuModel& m, const Cap& cap, std::uint64_t budget = 25'000'000,
                     std::uint64_t seed = 1);
CheckReport check_O4(const CuModel& m, const Cap& cap, std::uint64_t budget = 2'000'000,
                     std::uint64_t seed = 1);
CheckReport check_O5(const CuModel& m, const Cap& cap);
CheckReport check_O6plus(const CuModel& m, const Cap& cap);

/// All three equivalent forms of weak cancellation plus cancellation of
/// compact summands; the note records whether the per-form verdicts agree on
/// this cap. Form iii samples its extra quantifier slot past the budget.
CheckReport check_weak_cancellation(const CuModel& m, const Cap& cap,
                                    std::uint64_t budget = 30'000'000,
                                    std::uint64_t seed = 1);

CheckReport check_riesz(const CuModel& m, const Cap& cap);

/// Distributivity of addition over pairwise infima: the binary identity
/// (x+z) ^ (y+z) = (x^y)+z, the n-fold power identity n(x^y) = (nx)^(ny) for
/// n <= 3, and the iterated sum-of-meets identity over two groups of up to
/// three elements each.
CheckReport check_inf_distributivity(const CuModel& m, const Cap& cap,
                                     std::uint64_t budget = 2'000'000,
                                     std::uint64_t seed = 1);

/// x <= y implies x+z <= y+z, exhaustively on the cap.
CheckReport check_order_addition_compat(const CuModel& m, const Cap& cap);

}  // namespace cucalc

#endif
