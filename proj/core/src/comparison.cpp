#include "cucalc/comparison.hpp"

#include <algorithm>

#include "cucalc/axioms.hpp"
#include "cucalc/divisibility.hpp"

namespace cucalc {

namespace {
Finding bind(std::initializer_list<std::pair<const char*, std::string>> bs,
             std::string detail = "") {
  Finding f;
  for (auto& [k, v] : bs) f.bindings.emplace_back(k, v);
  f.detail = std::move(detail);
  return f;
}

ExtRat ratio(const ExtRat& a, const ExtRat& b) {
  // a / b with 0/0 = 0 and x/inf = 0
  if (a.is_zero()) return ExtRat(0);
  if (b.is_infinite()) return ExtRat(0);
  if (b.is_zero() || a.is_infinite()) return ExtRat::infinity();
  return ExtRat(a.num() * b.den(), a.den() * b.num());
}
}  // namespace

ExtRat normalized_sup(const CuModel& m, const Element& u, const Element& x) {
  if (m.kind() == ModelKind::Lsc || m.kind() == ModelKind::Quotient) {
    // vertices of the normalized weight simplex are the scaled point masses
    ExtRat best(0);
    for (std::size_t p = 0; p < u.vals().size(); ++p) {
      if (u.vals()[p].value().is_zero()) continue;
      ExtRat v = ratio(x.vals()[p].value(), u.vals()[p].value());
      if (best < v) best = v;
    }
    return best;
  }
  // torsion: one normalized functional (slope 1/deg(u))
  auto tm = dynamic_cast<const TorsionModel*>(&m.impl());
  if (tm) {
    auto du = tm->degree(u);
    auto dx = tm->degree(x);
    if (!du || *du == 0) return dx && *dx == 0 ? ExtRat(0) : ExtRat::infinity();
    return dx ? ExtRat(*dx, *du) : ExtRat::infinity();
  }
  throw std::invalid_argument("normalized_sup: unsupported model variant");
}

ExtRat normalized_inf(const CuModel& m, const Element& u, const Element& x) {
  if (m.kind() == ModelKind::Lsc || m.kind() == ModelKind::Quotient) {
    ExtRat best = ExtRat::infinity();
    for (std::size_t p = 0; p < u.vals().size(); ++p) {
      if (u.vals()[p].value().is_zero()) continue;
      ExtRat v = ratio(x.vals()[p].value(), u.vals()[p].value());
      if (v < best) best = v;
    }
    return best;
  }
  return normalized_sup(m, u, x);  // single normalized functional on torsion
}

namespace {

// x-hat + r*u-hat <= y-hat over the whole cone, decided on canonical ranks.
bool rank_shift_leq(const RankFunction& rx, const RankFunction& ru, const ExtRat& r,
                    const RankFunction& ry) {
  for (std::size_t p = 0; p < rx.values().size(); ++p) {
    ExtRat lhs = rx.values()[p] + r * ru.values()[p];
    if (!(lhs <= ry.values()[p])) return false;
  }
  return true;
}

}  // namespace

ComparisonReport comparison_suite(const CuModel& m, const std::optional<Element>& u,
                                  const Cap& cap,
                                  const std::vector<std::pair<std::int64_t, ExtRat>>&
                                      extra_local_weak) {
  ComparisonReport rep;
  rep.model = m.describe();
  Universe uni = Universe::build(m, cap);
  std::size_t n = uni.size();

  std::vector<RankFunction> ranks;
  ranks.reserve(n);
  for (const Element& e : uni.elems) ranks.push_back(rank(m, e));

  // almost unperforation: (n+1)x <= n y forces x <= y
  for (std::size_t ix = 0; ix < n; ++ix)
    for (std::size_t iy = 0; iy < n; ++iy) {
      if (uni.le(ix, iy)) continue;
      for (std::int64_t k = 1; k <= cap.search_bound; ++k) {
        if (m.leq(m.nmul(k + 1, uni.elems[ix]), m.nmul(k, uni.elems[iy]))) {
          rep.almost_unperforated = Verdict::Fails;
          rep.findings.push_back(bind({{"x", m.literal(uni.elems[ix])},
                                       {"y", m.literal(uni.elems[iy])},
                                       {"n", std::to_string(k)}},
                                      "(n+1)x <= ny but x !<= y"));
          break;
        }
      }
      if (rep.findings.size() > 10) break;
    }

  // strict comparison: rank domination with a gap forces order
  for (std::size_t ix = 0; ix < n; ++ix)
    for (std::size_t iy = 0; iy < n; ++iy) {
      if (uni.le(ix, iy)) continue;
      if (ranks[ix].is_extensional()
              ? [&] {
                  for (std::size_t g = 0; g < ranks[ix].grid().size(); ++g) {
                    const ExtRat& fv = ranks[ix].values()[g];
                    const ExtRat& gv = ranks[iy].values()[g];
                    if (fv.is_zero()) continue;
                    if (gv.is_infinite()) continue;
                    if (!(fv < gv)) return false;
                  }
                  return true;
                }()
              : rank_strictly_below(ranks[ix], ranks[iy])) {
        rep.strict_comparison = Verdict::Fails;
        rep.findings.push_back(bind({{"x", m.literal(uni.elems[ix])},
                                     {"y", m.literal(uni.elems[iy])}},
                                    "x-hat strictly below y-hat but x !<= y"));
        if (rep.findings.size() > 15) break;
      }
    }

  rep.notes.push_back(std::string("almost unperforation and strict comparison ") +
                      (rep.almost_unperforated == rep.strict_comparison ? "agree" : "DISAGREE") +
                      " on this cap");

  // m-comparison for m in {1, 2}
  for (std::int64_t mm = 1; mm <= 2; ++mm) {
    Verdict v = Verdict::Holds;
    std::uint64_t budget = 400000;
    std::uint64_t count = 0;
    std::vector<std::size_t> ys(static_cast<std::size_t>(mm) + 1);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t ix) -> bool {
      if (count > budget) return true;
      if (pos == ys.size()) {
        ++count;
        bool all_below = true;
        for (auto iy : ys)
          if (!(ranks[ix].is_extensional() ? false
                                           : rank_strictly_below(ranks[ix], ranks[iy])))
            all_below = false;
        if (!all_below) return false;
        Element sum = m.zero();
        for (auto iy : ys) sum = m.add(sum, uni.elems[iy]);
        if (!m.leq(uni.elems[ix], sum)) {
          v = Verdict::Fails;
          rep.findings.push_back(bind({{"x", m.literal(uni.elems[ix])}},
                                      std::to_string(mm) + "-comparison fails"));
          return true;
        }
        return false;
      }
      for (std::size_t iy = 0; iy < n; ++iy) {
        ys[pos] = iy;
        if (self(self, pos + 1, ix)) return true;
      }
      return false;
    };
    for (std::size_t ix = 0; ix < n && count <= budget; ++ix) rec(rec, 0, ix);
    if (count > budget) rep.notes.push_back(std::to_string(mm) + "-comparison truncated at budget");
    rep.m_comparison.emplace_back(mm, v);
  }

  if (u) {
    const Element& uu = *u;
    RankFunction ru = rank(m, uu);

    // local weak (m,gamma)-comparison over a small parameter window plus any
    // caller-requested pairs
    std::vector<std::pair<std::int64_t, ExtRat>> window = {
        {1, ExtRat(1)}, {1, ExtRat(2)}, {2, ExtRat(1)}, {2, ExtRat(2)}};
    for (const auto& mg : extra_local_weak) window.push_back(mg);
    for (const auto& [mm, g] : window) {
      Verdict v = Verdict::Holds;
      for (std::size_t ix = 0; ix < n && v == Verdict::Holds; ++ix)
        for (std::size_t iy = 0; iy < n; ++iy) {
          if (!m.is_full(uni.elems[iy])) continue;
          ExtRat lhs = normalized_sup(m, uu, uni.elems[ix]) * g;
          ExtRat rhs = normalized_inf(m, uu, uni.elems[iy]);
          if (!(lhs <= rhs)) continue;
          if (!m.leq(uni.elems[ix], m.nmul(mm, uni.elems[iy]))) {
            v = Verdict::Fails;
            rep.findings.push_back(bind({{"x", m.literal(uni.elems[ix])},
                                         {"y", m.literal(uni.elems[iy])}},
                                        "local weak (" + std::to_string(mm) + "," + g.str() +
                                            ")-comparison fails"));
            break;
          }
        }
      rep.local_weak.push_back("(" + std::to_string(mm) + "," + g.str() + ") -> " +
                               to_string(v));
    }

    // radius of comparison, exactly: for each violating pair x !<= y the
    // premise x-hat + r*u-hat <= y-hat stays active for r up to a rational
    // activation threshold; the radius is the supremum of those thresholds
    // (0 when no pair activates at a positive r). A grid pass cross-checks.
    auto threshold = [&](const RankFunction& rx, const RankFunction& ry) -> std::optional<ExtRat> {
      // sup { r >= 0 : rx + r*ru <= ry pointwise }, nullopt when empty
      ExtRat best = ExtRat::infinity();
      for (std::size_t p = 0; p < rx.values().size(); ++p) {
        const ExtRat& xv = rx.values()[p];
        const ExtRat& yv = ry.values()[p];
        const ExtRat& uv = ru.values()[p];
        if (yv.is_infinite()) continue;           // no constraint from this direction
        if (xv.is_infinite() || !(xv <= yv)) return std::nullopt;
        if (uv.is_zero()) continue;               // r does not enter
        if (uv.is_infinite()) return std::nullopt;  // any r > 0 breaks the premise
        ExtRat gap = yv.monus(xv);
        ExtRat t(gap.num() * uv.den(), gap.den() * uv.num());
        if (t < best) best = t;
      }
      return best;
    };
    bool supported = true;
    ExtRat rc(0);
    bool unbounded = false;
    for (std::size_t ix = 0; ix < n && supported; ++ix)
      for (std::size_t iy = 0; iy < n; ++iy) {
        if (uni.le(ix, iy)) continue;
        if (ranks[ix].is_extensional() || ranks[iy].is_extensional()) {
          supported = false;
          break;
        }
        auto t = threshold(ranks[ix], ranks[iy]);
        if (!t) continue;
        if (t->is_infinite()) {
          unbounded = true;
          rep.findings.push_back(bind({{"x", m.literal(uni.elems[ix])},
                                       {"y", m.literal(uni.elems[iy])}},
                                      "premise active for every radius"));
        } else if (rc < *t) {
          rc = *t;
        }
      }
    if (!supported) {
      rep.radius_of_comparison = "unsupported (extensional ranks)";
      rep.radius_exact = false;
    } else if (unbounded) {
      rep.radius_of_comparison = "inf";
      rep.radius_exact = true;
      rep.findings.push_back(bind({}, "radius of comparison candidate above zero"));
    } else {
      // cross-check on the rational grid: the premise set shrinks with r, so
      // rc + 1/32 must pass and, when rc > 0, rc itself must still fail
      auto passes = [&](const ExtRat& r) {
        for (std::size_t ix = 0; ix < n; ++ix)
          for (std::size_t iy = 0; iy < n; ++iy) {
            if (uni.le(ix, iy)) continue;
            if (rank_shift_leq(ranks[ix], ru, r, ranks[iy])) return false;
          }
        return true;
      };
      bool consistent = passes(rc + ExtRat(1, 32)) && (rc.is_zero() || !passes(rc));
      rep.radius_exact = consistent;
      rep.radius_of_comparison = rc.str();
      if (!consistent) rep.notes.push_back("grid cross-check disagreed with the threshold scan");
      if (!rc.is_zero())
        rep.findings.push_back(bind({}, "radius of comparison candidate above zero"));
    }
  }

  return rep;
}

CheckReport check_supersoft_equivalences(const CuModel& m, const Element& u, const Cap& cap) {
  CheckReport r{"supersoft-equivalences", m.describe()};
  Universe uni = Universe::build(m, cap);
  std::size_t n = uni.size();
  RankFunction ru = rank(m, u);

  // standing hypothesis pattern
  {
    bool full_compact = m.is_compact(u) && m.is_full(u);
    r.notes.push_back(std::string("hypothesis: u full compact: ") +
                      (full_compact ? "yes" : "NO"));
    bool integer_points = false;
    if (auto lsc = dynamic_cast<const LscModel*>(&m.impl()))
      for (auto k : lsc->kinds())
        if (k == ScalarKind::NBar) integer_points = true;
    r.notes.push_back(std::string("hypothesis: integer-ranked directions present "
                                  "(elementary-type behaviour expected): ") +
                      (integer_points ? "yes" : "no"));
  }

  BoundedPart W = bounded_part(m, u, cap);
  auto in_W = [&](const Element& x) {
    for (const Element& w : W.members)
      if (w == x) return true;
    return false;
  };

  // family A: bounded ranks versus the bounded part, full supersofts in it,
  // uniform comparison below u-hat, finite radius
  bool a1 = true;
  for (const Element& x : uni.elems) {
    bool rank_bounded = false;
    for (std::int64_t k = 1; k <= cap.search_bound && !rank_bounded; ++k)
      if (rank(m, x).leq(ru.scaled(ExtRat(k)))) rank_bounded = true;
    if (rank_bounded != in_W(x)) {
      a1 = false;
      r.counterexamples.push_back(
          bind({{"x", m.literal(x)}},
               rank_bounded ? "rank bounded by n*u-hat but x outside the bounded part"
                            : "x in the bounded part but rank not bounded on the grid"));
      break;
    }
  }
  bool a2 = false;
  for (const Element& x : W.members)
    if (m.is_full(x) && is_supersoft(m, x, cap).supersoft) {
      a2 = true;
      break;
    }
  bool a3 = false;
  for (std::int64_t N = 1; N <= cap.search_bound && !a3; ++N) {
    bool works = true;
    for (const Element& x : uni.elems)
      if (rank(m, x).leq(ru) && !m.leq(x, m.nmul(N, u))) {
        works = false;
        break;
      }
    if (works) a3 = true;
  }
  ComparisonReport comp = comparison_suite(m, u, cap);
  bool a4 = comp.radius_of_comparison != "inf";

  r.notes.push_back(std::string("finite-radius family: (i) ") + (a1 ? "T" : "F") + " (ii) " +
                    (a2 ? "T" : "F") + " (iii) " + (a3 ? "T" : "F") + " (iv) " +
                    (a4 ? "T" : "F"));
  if (!(a1 == a2 && a2 == a3 && a3 == a4))
    r.fail(bind({}, "finite-radius family conditions disagree (finding; valid only under the "
                    "standing hypotheses)"));

  // family B: local weak comparison, full supersoft minorants of full
  // elements, strict comparison on full elements, alpha as a morphism on
  // full rank functions
  bool b1 = false;
  for (const auto& lw : comp.local_weak)
    if (lw.find("holds") != std::string::npos) b1 = true;
  bool b2 = true;
  for (const Element& x : uni.elems) {
    if (!m.is_full(x)) continue;
    bool found = false;
    for (const Element& z : uni.elems)
      if (m.leq(z, x) && m.is_full(z) && is_supersoft(m, z, cap).supersoft) {
        found = true;
        break;
      }
    if (!found) {
      b2 = false;
      break;
    }
  }
  bool b3 = true;
  for (std::size_t ix = 0; ix < n && b3; ++ix)
    for (std::size_t iy = 0; iy < n; ++iy) {
      if (!m.is_full(uni.elems[iy]) || uni.le(ix, iy)) continue;
      if (!rank(m, uni.elems[ix]).is_extensional() &&
          rank_strictly_below(rank(m, uni.elems[ix]), rank(m, uni.elems[iy]))) {
        b3 = false;
        break;
      }
    }
  bool b4 = true;
  {
    auto grid = rank_grid(m, cap);
    std::vector<std::size_t> full_idx;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      // full rank functions are strictly positive wherever some element is
      bool full = true;
      for (const auto& v : grid[i].values())
        if (v.is_zero()) full = false;
      if (full) full_idx.push_back(i);
    }
    for (std::size_t a : full_idx) {
      for (std::size_t b : full_idx) {
        auto va = alpha(m, grid[a], cap), vb = alpha(m, grid[b], cap),
             vs = alpha(m, grid[a].plus(grid[b]), cap);
        if (!va.value || !vb.value || !vs.value) continue;
        if (!(m.add(*va.value, *vb.value) == *vs.value)) {
          b4 = false;
          break;
        }
        if (rank_strictly_below(grid[a], grid[b]) && !m.way_below(*va.value, *vb.value)) {
          b4 = false;
          break;
        }
      }
      if (!b4) break;
    }
  }
  r.notes.push_back(std::string("local-weak family: (i) ") + (b1 ? "T" : "F") + " (ii) " +
                    (b2 ? "T" : "F") + " (iii) " + (b3 ? "T" : "F") + " (iv) " +
                    (b4 ? "T" : "F"));
  if (!(b1 == b2 && b2 == b3 && b3 == b4))
    r.fail(bind({}, "local-weak family conditions disagree (finding; valid only under the "
                    "standing hypotheses)"));

  // family C: m-comparison, uniform gamma comparison, supersoft minorants
  // with the same ideal, strict comparison
  bool c1 = false;
  if (comp.strict_comparison == Verdict::Holds) c1 = true;
  for (auto& [mm, v] : comp.m_comparison)
    if (v == Verdict::Holds) c1 = true;
  bool c2 = false;
  for (std::int64_t N = 1; N <= 4 && !c2; ++N) {
    bool works = true;
    for (std::size_t ix = 0; ix < n && works; ++ix)
      for (std::size_t iy = 0; iy < n; ++iy) {
        if (rank(m, uni.elems[ix]).is_extensional()) continue;
        if (rank(m, uni.elems[ix]).scaled(ExtRat(2)).leq(rank(m, uni.elems[iy])) &&
            !m.leq(uni.elems[ix], m.nmul(N, uni.elems[iy]))) {
          works = false;
          break;
        }
      }
    if (works) c2 = true;
  }
  bool c3 = true;
  for (const Element& x : uni.elems) {
    bool found = false;
    for (const Element& y : uni.elems)
      if (m.leq(y, x) && m.saturate(y) == m.saturate(x) &&
          is_supersoft(m, y, cap).supersoft) {
        found = true;
        break;
      }
    if (!found) {
      c3 = false;
      r.witness(bind({{"x", m.literal(x)}}, "no supersoft minorant generating the same ideal"));
      break;
    }
  }
  bool c4 = comp.strict_comparison == Verdict::Holds;
  r.notes.push_back(std::string("strict family: (i) ") + (c1 ? "T" : "F") + " (ii) " +
                    (c2 ? "T" : "F") + " (iii) " + (c3 ? "T" : "F") + " (iv) " +
                    (c4 ? "T" : "F"));
  if (!(c1 == c2 && c2 == c3 && c3 == c4))
    r.fail(bind({}, "strict family conditions disagree (finding; valid only under the standing "
                    "hypotheses)"));
  return r;
}

}  // namespace cucalc
