#ifndef CUCALC_GROTHENDIECK_HPP
#define CUCALC_GROTHENDIECK_HPP

#include <vector>

#include "cucalc/frac.hpp"
#include "cucalc/ideals.hpp"

namespace cucalc {

/// Builds the group of formal differences of the u-bounded submonoid with
/// positive cone the differences x - y over y <= x, then checks Riesz
/// interpolation on cap-bounded quadruples. A non-cancellative bounded part
/// is reported as unsupported for the group construction; the Riesz check on
/// the submonoid itself still runs and is reported in the notes.
CheckReport grothendieck_interpolation(const CuModel& m, const Element& u, const Cap& cap);

/// The normalized states of the difference group as an exact rational
/// polytope, plus the finite-dimensional Choquet criterion: the polytope is
/// a simplex iff its extreme points are affinely independent.
struct DimensionFunctionCone {
  bool supported = false;
  std::string reason;                     // when unsupported
  std::vector<std::vector<Frac>> vertices;
  bool simplex = false;
  std::vector<std::string> notes;
};

DimensionFunctionCone dimension_function_cone(const CuModel& m, const Element& u, const Cap& cap);

/// Exact vertex enumeration for { v : ineq * v >= rhs } intersected with
/// { eq * v = eq_rhs }; rows are coefficient vectors. Small dimensions only.
std::vector<std::vector<Frac>> polytope_vertices(
    const std::vector<std::vector<Frac>>& ineq, const std::vector<Frac>& ineq_rhs,
    const std::vector<std::vector<Frac>>& eq, const std::vector<Frac>& eq_rhs);

bool affinely_independent(const std::vector<std::vector<Frac>>& pts);

}  // namespace cucalc

#endif
