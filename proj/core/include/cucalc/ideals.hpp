#ifndef CUCALC_IDEALS_HPP
#define CUCALC_IDEALS_HPP

#include <cstdint>

#include "cucalc/axioms.hpp"
#include "cucalc/cap.hpp"
#include "cucalc/model.hpp"
#include "cucalc/report.hpp"

namespace cucalc {

/// An order-hereditary submonoid closed under suprema of increasing
/// sequences. For lsc-family models every ideal is induced by an
/// upward-closed set of points: the functions vanishing off it.
struct Ideal {
  CuModel model;
  std::uint32_t up_mask = 0;

  bool contains(const Element& x) const;
  std::string describe() const;
};

/// Ideal of functions supported on the upward-closed set `mask`.
/// Throws if the mask is not upward closed.
Ideal ideal_from_open(const CuModel& lsc_model, std::uint32_t mask);

/// Cap-level validation that an ideal is order-hereditary, a submonoid, and
/// closed under encoded chain suprema.
CheckReport check_ideal(const Ideal& I, const Cap& cap);

/// Largest element of the ideal (inf * indicator of the support).
/// Idempotent: omega + omega = omega.
Element omega_ideal(const Ideal& I);

/// Quotient by the ideal, with canonical representatives x + omega.
CuModel quotient(const CuModel& m, const Ideal& I);

/// The quotient of an lsc model by an open-set ideal is order-isomorphic to
/// the lsc model on the complement sub-poset; verified element-by-element on
/// the cap.
CheckReport check_quotient_iso_complement(const CuModel& m, const Ideal& I, const Cap& cap);

/// (x^y) + omega = (x+omega)^(y+omega) on the cap.
CheckReport check_quotient_preserves_inf(const CuModel& m, const Ideal& I, const Cap& cap);

/// The pullback decomposition over two ideals: z -> (z+omega_I, z+omega_J)
/// is a bijection from omega_{IJ}+S onto the compatible pairs, with inverse
/// (z1,z2) -> z1^z2; also checks omega arithmetic for the sum and
/// intersection ideals.
CheckReport pullback_check(const CuModel& m, const Ideal& I, const Ideal& J, const Cap& cap);

/// Membership window of the submonoid of u-bounded elements within the cap,
/// plus hereditary/submonoid confirmation.
struct BoundedPart {
  Element u;
  std::vector<Element> members;  // cap elements x with x <= n*u for some n
  CheckReport report;
};
BoundedPart bounded_part(const CuModel& m, const Element& u, const Cap& cap);

}  // namespace cucalc

#endif
