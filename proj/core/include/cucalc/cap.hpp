#ifndef CUCALC_CAP_HPP
#define CUCALC_CAP_HPP

#include <cstdint>
#include <optional>

#include "cucalc/model.hpp"

namespace cucalc {

/// A finite enumeration window: elements below `bound` whose coordinates lie
/// on the {0..ceiling, inf} grid (soft/rational values on the 1/denominator
/// sub-grid). Universally quantified checks are decided on this window only;
/// verdicts say so explicitly when a witness could live outside it.
struct Cap {
  std::optional<Element> bound;     // default: the model's largest element
  std::int64_t ceiling = 4;
  std::int64_t denominator = 2;
  std::int64_t search_bound = 16;   // n-searches (domination, omega-divisibility)

  Cap() = default;
  explicit Cap(std::int64_t ceil, std::int64_t denom = 2, std::int64_t nbound = 16)
      : ceiling(ceil), denominator(denom), search_bound(nbound) {}
  Cap with_bound(Element b) const {
    Cap c = *this;
    c.bound = std::move(b);
    return c;
  }
};

}  // namespace cucalc

#endif
