#include "cucalc/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cucalc {

namespace {
const LscModel& as_lsc(const CuModel& m) {
  auto p = dynamic_cast<const LscModel*>(&m.impl());
  if (!p) throw std::invalid_argument("operation requires an lsc-family model");
  return *p;
}

Finding bind(std::initializer_list<std::pair<const char*, std::string>> bs,
             std::string detail = "") {
  Finding f;
  for (auto& [k, v] : bs) f.bindings.emplace_back(k, v);
  f.detail = std::move(detail);
  return f;
}
}  // namespace

bool Ideal::contains(const Element& x) const {
  model.impl().require_mine(x);
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    if (!(up_mask >> p & 1) && !x.vals()[p].is_zero()) return false;
  return true;
}

std::string Ideal::describe() const {
  const auto& lsc = as_lsc(model);
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t p = 0; p < lsc.poset().size(); ++p)
    if (up_mask >> p & 1) {
      if (!first) os << ",";
      os << lsc.poset().points()[p];
      first = false;
    }
  os << "}";
  return os.str();
}

Ideal ideal_from_open(const CuModel& m, std::uint32_t mask) {
  const auto& lsc = as_lsc(m);
  if (!lsc.poset().is_up_closed(mask))
    throw std::invalid_argument("ideal support must be an upward-closed set");
  return Ideal{m, mask};
}

CheckReport check_ideal(const Ideal& I, const Cap& cap) {
  CheckReport r{"ideal", I.model.describe() + " / " + I.describe()};
  const CuModel& m = I.model;
  auto elems = m.enumerate(cap);
  if (!I.contains(m.zero())) r.fail(bind({}, "ideal does not contain 0"));
  for (const Element& x : elems) {
    for (const Element& y : elems) {
      ++r.tuples_examined;
      if (I.contains(y) && m.leq(x, y) && !I.contains(x))
        r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}}, "not order-hereditary"));
      if (I.contains(x) && I.contains(y)) {
        if (!I.contains(m.add(x, y)))
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}}, "not closed under addition"));
        if (!I.contains(m.sup_chain(x, y)))
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                      "not closed under chain suprema"));
      }
      if (r.counterexamples.size() > 10) return r;
    }
  }
  return r;
}

Element omega_ideal(const Ideal& I) {
  const auto& lsc = as_lsc(I.model);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < lsc.poset().size(); ++p)
    v.push_back((I.up_mask >> p & 1) ? Scalar::top_of(lsc.kinds()[p])
                                     : Scalar::zero_of(lsc.kinds()[p]));
  return lsc.from_values(std::move(v));
}

CuModel quotient(const CuModel& m, const Ideal& I) {
  as_lsc(m);  // validates the family
  auto base = std::dynamic_pointer_cast<const LscModel>(m.share());
  return CuModel(std::make_shared<QuotientModel>(base, I.up_mask));
}

CheckReport check_quotient_iso_complement(const CuModel& m, const Ideal& I, const Cap& cap) {
  CheckReport r{"quotient-iso", m.describe() + " / " + I.describe()};
  const auto& lsc = as_lsc(m);
  CuModel q = quotient(m, I);
  std::uint32_t mask = I.up_mask;

  std::vector<std::size_t> kept;
  for (std::size_t p = 0; p < lsc.poset().size(); ++p)
    if (!(mask >> p & 1)) kept.push_back(p);

  if (kept.empty()) {
    auto qe = q.enumerate(cap);
    if (qe.size() != 1)
      r.fail(bind({}, "quotient by the whole model is not the one-element model"));
    r.notes.push_back("quotient by the whole model collapses to {0}");
    return r;
  }

  FinitePoset sub = lsc.poset().restrict_complement(mask);
  std::vector<ScalarKind> kinds;
  for (auto p : kept) kinds.push_back(lsc.kinds()[p]);
  CuModel target = make_lsc(sub, kinds);

  auto restrict = [&](const Element& x) {
    std::vector<Scalar> v;
    for (auto p : kept) v.push_back(x.vals()[p]);
    return dynamic_cast<const LscModel&>(target.impl()).from_values(std::move(v));
  };

  auto qelems = q.enumerate(cap);
  auto telems = target.enumerate(cap);
  if (qelems.size() != telems.size())
    r.fail(bind({}, "cap cardinalities differ: " + std::to_string(qelems.size()) + " vs " +
                        std::to_string(telems.size())));
  for (const Element& x : qelems)
    for (const Element& y : qelems) {
      ++r.tuples_examined;
      bool lhs = q.leq(x, y);
      bool rhs = target.leq(restrict(x), restrict(y));
      if (lhs != rhs) {
        r.fail(bind({{"x", q.literal(x)}, {"y", q.literal(y)}},
                    "restriction to the complement poset is not an order-isomorphism"));
        if (r.counterexamples.size() > 10) return r;
      }
      if (!(restrict(q.add(x, y)) == target.add(restrict(x), restrict(y))))
        r.fail(bind({{"x", q.literal(x)}, {"y", q.literal(y)}},
                    "restriction does not respect addition"));
    }
  return r;
}

CheckReport check_quotient_preserves_inf(const CuModel& m, const Ideal& I, const Cap& cap) {
  CheckReport r{"quotient-preserves-inf", m.describe() + " / " + I.describe()};
  Element omega = omega_ideal(I);
  auto elems = m.enumerate(cap);
  for (const Element& x : elems)
    for (const Element& y : elems) {
      ++r.tuples_examined;
      auto xy = m.infimum(x, y);
      if (!xy) {
        r.inconclusive(bind({{"x", m.literal(x)}, {"y", m.literal(y)}}, "no infimum"));
        continue;
      }
      Element lhs = m.add(*xy, omega);
      auto rhs = m.infimum(m.add(x, omega), m.add(y, omega));
      if (!rhs || !(lhs == *rhs)) {
        r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                    "(x^y)+omega differs from (x+omega)^(y+omega)"));
        if (r.counterexamples.size() > 10) return r;
      }
    }
  return r;
}

CheckReport pullback_check(const CuModel& m, const Ideal& I, const Ideal& J, const Cap& cap) {
  CheckReport r{"pullback", m.describe() + " over " + I.describe() + "," + J.describe()};
  const auto& lsc = as_lsc(m);
  (void)lsc;
  Element oI = omega_ideal(I), oJ = omega_ideal(J);
  Ideal Isum{I.model, I.up_mask | J.up_mask};
  Ideal Icap{I.model, I.up_mask & J.up_mask};
  Element oSum = omega_ideal(Isum), oCap = omega_ideal(Icap);

  if (!(m.add(oI, oJ) == oSum))
    r.fail(bind({}, "omega of the sum ideal differs from omega_I + omega_J"));
  auto meet = m.infimum(oI, oJ);
  if (!meet || !(*meet == oCap))
    r.fail(bind({}, "omega of the intersection ideal differs from omega_I ^ omega_J"));

  auto elems = m.enumerate(cap);
  auto canon = [&](const Element& x, const Element& o) { return m.add(x, o); };

  // canonical images z + omega_{I cap J}, deduplicated in enumeration order
  std::vector<Element> domain;
  for (const Element& z : elems) {
    Element c = canon(z, oCap);
    if (std::find(domain.begin(), domain.end(), c) == domain.end()) domain.push_back(c);
  }

  // forward map lands in the pullback and is injective
  std::vector<std::pair<Element, Element>> image;
  for (const Element& z : domain) {
    ++r.tuples_examined;
    Element z1 = canon(z, oI), z2 = canon(z, oJ);
    if (!(m.add(z1, oJ) == m.add(z2, oI)))
      r.fail(bind({{"z", m.literal(z)}}, "image pair is not compatible"));
    auto back = m.infimum(z1, z2);
    if (!back || !(*back == z))
      r.fail(bind({{"z", m.literal(z)}}, "z1^z2 does not recover z"));
    image.emplace_back(z1, z2);
  }
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = i + 1; j < domain.size(); ++j)
      if (image[i].first == image[j].first && image[i].second == image[j].second)
        r.fail(bind({{"z", m.literal(domain[i])}, {"z'", m.literal(domain[j])}},
                    "two distinct elements share an image pair"));

  // surjectivity with uniqueness: every compatible pair in the cap has
  // exactly one preimage
  std::vector<Element> side1, side2;
  for (const Element& z : elems) {
    Element c1 = canon(z, oI);
    if (std::find(side1.begin(), side1.end(), c1) == side1.end()) side1.push_back(c1);
    Element c2 = canon(z, oJ);
    if (std::find(side2.begin(), side2.end(), c2) == side2.end()) side2.push_back(c2);
  }
  for (const Element& z1 : side1)
    for (const Element& z2 : side2) {
      if (!(m.add(z1, oJ) == m.add(z2, oI))) continue;
      ++r.tuples_examined;
      std::size_t preimages = 0;
      for (const Element& z : domain) {
        if (canon(z, oI) == z1 && canon(z, oJ) == z2) ++preimages;
      }
      if (preimages != 1) {
        r.fail(bind({{"z1", m.literal(z1)}, {"z2", m.literal(z2)}},
                    "compatible pair has " + std::to_string(preimages) + " preimages"));
        if (r.counterexamples.size() > 10) return r;
      }
      auto z = m.infimum(z1, z2);
      if (!z || !(canon(*z, oI) == z1) || !(canon(*z, oJ) == z2))
        r.fail(bind({{"z1", m.literal(z1)}, {"z2", m.literal(z2)}},
                    "inverse candidate z1^z2 does not map back to the pair"));
    }
  return r;
}

BoundedPart bounded_part(const CuModel& m, const Element& u, const Cap& cap) {
  BoundedPart out{u, {}, CheckReport{"bounded-part", m.describe()}};
  auto elems = m.enumerate(cap);
  auto member = [&](const Element& x) { return m.dominates(x, u, cap.search_bound).has_value(); };
  for (const Element& x : elems)
    if (member(x)) out.members.push_back(x);
  CheckReport& r = out.report;
  for (const Element& x : out.members) {
    for (const Element& y : elems) {
      ++r.tuples_examined;
      if (m.leq(y, x) && !member(y))
        r.fail(bind({{"y", m.literal(y)}, {"x", m.literal(x)}}, "not hereditary"));
    }
    for (const Element& y : out.members) {
      if (!member(m.add(x, y)))
        r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}}, "not a submonoid"));
      if (r.counterexamples.size() > 10) return out;
    }
  }
  r.notes.push_back(std::to_string(out.members.size()) + " of " + std::to_string(elems.size()) +
                    " cap elements are bounded by a multiple of u");
  return out;
}

}  // namespace cucalc
