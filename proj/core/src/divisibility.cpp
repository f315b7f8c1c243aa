#include "cucalc/divisibility.hpp"

#include <stdexcept>

#include "cucalc/axioms.hpp"

namespace cucalc {

namespace {
Finding bind(std::initializer_list<std::pair<const char*, std::string>> bs,
             std::string detail = "") {
  Finding f;
  for (auto& [k, v] : bs) f.bindings.emplace_back(k, v);
  f.detail = std::move(detail);
  return f;
}
}  // namespace

std::int64_t constant_M(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("constant_M: k, n >= 1 required");
  std::int64_t best = 0;
  for (std::int64_t r = 1; r <= k; ++r) {
    std::int64_t p = 1;  // n^(r-1)
    for (std::int64_t i = 0; i < r - 1; ++i) p *= n;
    std::int64_t value = p * n * (k - r) + p;
    best = std::max(best, value);
  }
  return best;
}

std::int64_t constant_N_wedge(std::int64_t n, std::int64_t M) {
  if (n < 1 || M < 1) throw std::invalid_argument("constant_N_wedge: n, M >= 1 required");
  return n * (M - 1) + 1;
}

std::int64_t constant_N_cugg(std::int64_t k, std::int64_t n) {
  return k * (constant_M(k, n) - 1) + 1;
}

namespace {

// Largest scalar y with k*y <= v. On the two-layer semigroup the compact
// floor wins exactly when k divides a compact value; otherwise the soft
// value v/k sits strictly higher.
Scalar floor_div_scalar(const Scalar& v, std::int64_t k) {
  switch (v.kind()) {
    case ScalarKind::NBar:
      return Scalar::nat(v.value().is_infinite() ? v.value()
                                                 : ExtRat(v.value().num() / k));
    case ScalarKind::ExtRat:
      return Scalar::rational(v.value().is_infinite() ? v.value()
                                                      : ExtRat(v.value().num(),
                                                               v.value().den() * k));
    case ScalarKind::ZCu: {
      if (v.value().is_infinite()) return v;
      ExtRat q(v.value().num(), v.value().den() * k);
      if (!v.is_soft_layer() && v.value().num() % k == 0)
        return Scalar::zcu_compact(v.value().num() / k);
      if (q.is_zero()) return Scalar::zcu_compact(0);
      return Scalar::zcu_soft(q);
    }
  }
  throw std::logic_error("floor_div_scalar");
}

// The pointwise-maximal witness with k*y <= x on lsc-family models. Every
// admissible y is dominated by it, so both the plain and the weak witness
// searches reduce to coverage by its multiples.
std::optional<Element> maximal_witness(const CuModel& m, const Element& x, std::int64_t k) {
  if (m.kind() != ModelKind::Lsc && m.kind() != ModelKind::Quotient) return std::nullopt;
  std::vector<Scalar> v;
  for (const Scalar& s : x.vals()) v.push_back(floor_div_scalar(s, k));
  if (auto lsc = dynamic_cast<const LscModel*>(&m.impl())) return lsc->from_values(std::move(v));
  auto q = dynamic_cast<const QuotientModel*>(&m.impl());
  return q->canonical(q->base().from_values(std::move(v)));
}

}  // namespace

DivisibilityResult is_divisible(const CuModel& m, const Element& x, const DivisibilityQuery& q,
                                const Cap& cap) {
  DivisibilityResult out;
  CheckReport& r = out.report;
  r.checker = q.weak ? "weakly-divisible" : "divisible";
  r.model = m.describe();
  if (q.k < 1 || (!q.omega && q.n < 1))
    throw std::invalid_argument("divisibility: k, n >= 1 required");

  Universe u = Universe::build(m, cap);
  std::vector<std::size_t> belows;  // x' << x
  for (std::size_t i = 0; i < u.size(); ++i)
    if (m.way_below(u.elems[i], x)) belows.push_back(i);

  std::int64_t n_hi = q.omega ? cap.search_bound : q.n;

  // pointwise models: y* = floor(x/k) dominates every admissible witness,
  // so coverage by n*y* decides both modes exactly
  if (auto ystar = maximal_witness(m, x, q.k)) {
    for (std::size_t ixp : belows) {
      const Element& xp = u.elems[ixp];
      ++r.tuples_examined;
      std::optional<std::int64_t> n_used;
      for (std::int64_t n = q.omega ? 1 : q.n; n <= n_hi; ++n)
        if (m.leq(xp, m.nmul(n, *ystar))) {
          n_used = n;
          break;
        }
      if (n_used) {
        DivisibilityCertificate c{xp, {}, *n_used, false};
        std::size_t copies = q.weak ? static_cast<std::size_t>(*n_used) : 1;
        for (std::size_t j = 0; j < copies; ++j) c.witnesses.push_back(*ystar);
        bool strong = m.way_below(m.nmul(q.k, *ystar), x);
        Element cover = m.nmul(*n_used, *ystar);
        c.strengthened = strong && m.way_below(xp, cover);
        out.certificates.push_back(std::move(c));
      } else if (q.omega) {
        r.inconclusive(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                            "no witness up to the omega search bound"));
      } else {
        r.fail(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                    "no witness: even the maximal admissible y leaves x' uncovered"));
      }
    }
    return out;
  }

  // candidate witnesses satisfy k*y <= x, hence y <= x; the cap grid is
  // witness-complete for the built-in families
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (m.leq(m.nmul(q.k, u.elems[i]), x)) cand.push_back(i);

  for (std::size_t ixp : belows) {
    const Element& xp = u.elems[ixp];
    std::optional<DivisibilityCertificate> cert;
    if (!q.weak) {
      for (std::int64_t n = q.omega ? 1 : q.n; n <= n_hi && !cert; ++n) {
        for (std::size_t iy : cand) {
          const Element& y = u.elems[iy];
          if (!m.leq(xp, m.nmul(n, y))) continue;
          DivisibilityCertificate c{xp, {y}, n, false};
          c.strengthened =
              m.way_below(m.nmul(q.k, y), x) && m.way_below(xp, m.nmul(n, y));
          cert = std::move(c);
          break;
        }
      }
    } else {
      for (std::int64_t n = q.omega ? 1 : q.n; n <= n_hi && !cert; ++n) {
        // lexicographic tuples y_1 <= ... <= y_n from the candidate list
        std::vector<std::size_t> tup(static_cast<std::size_t>(n), 0);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
          if (pos == tup.size()) {
            Element s = m.zero();
            for (auto iy : tup) s = m.add(s, u.elems[iy]);
            if (!m.leq(xp, s)) return false;
            DivisibilityCertificate c{xp, {}, n, false};
            bool strong = m.way_below(xp, s);
            for (auto iy : tup) {
              c.witnesses.push_back(u.elems[iy]);
              if (!m.way_below(m.nmul(q.k, u.elems[iy]), x)) strong = false;
            }
            c.strengthened = strong;
            cert = std::move(c);
            return true;
          }
          for (std::size_t ci = start; ci < cand.size(); ++ci) {
            tup[pos] = cand[ci];
            if (self(self, pos + 1, ci)) return true;
          }
          return false;
        };
        rec(rec, 0, 0);
      }
    }
    ++r.tuples_examined;
    if (cert) {
      out.certificates.push_back(std::move(*cert));
    } else if (q.omega) {
      r.inconclusive(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                          "no witness up to the omega search bound"));
    } else {
      r.fail(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                  "no witness in the cap window"));
    }
  }
  return out;
}

CheckReport verify_wedgefull(const CuModel& m, const Element& x, const std::vector<Element>& ys,
                             std::int64_t M) {
  CheckReport r{"wedgefull", m.describe()};
  if (ys.empty()) throw std::invalid_argument("wedgefull: needs at least one y");
  for (const Element& y : ys)
    if (!m.leq(x, m.nmul(M, y))) {
      r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                  "precondition x <= M*y violated"));
      return r;
    }
  Element meet = ys[0];
  for (std::size_t i = 1; i < ys.size(); ++i) {
    auto mm = m.infimum(meet, ys[i]);
    if (!mm) {
      r.fail(bind({{"y", m.literal(ys[i])}}, "model lacks the needed infimum"));
      return r;
    }
    meet = *mm;
  }
  std::int64_t N = constant_N_wedge(static_cast<std::int64_t>(ys.size()), M);
  ++r.tuples_examined;
  if (!m.leq(x, m.nmul(N, meet))) {
    r.fail(bind({{"x", m.literal(x)}, {"meet", m.literal(meet)}},
                "x !<= N*meet with N = " + std::to_string(N)));
    return r;
  }
  std::int64_t minimal = N;
  for (std::int64_t c = N - 1; c >= 0; --c) {
    if (m.leq(x, m.nmul(c, meet))) minimal = c;
    else break;
  }
  r.notes.push_back("bound N = " + std::to_string(N) + ", minimal N' = " +
                    std::to_string(minimal));
  r.witness(bind({{"meet", m.literal(meet)}, {"N'", std::to_string(minimal)}}));
  return r;
}

CheckReport verify_cugg(const CuModel& m, const Element& x, std::int64_t k, std::int64_t n,
                        const Cap& cap, const CuggHypotheses* hyp) {
  CheckReport r{"cugg", m.describe()};
  CuggHypotheses local;
  if (!hyp) {
    local.o5 = check_O5(m, cap).verdict;
    local.weak_cancellation = check_weak_cancellation(m, cap).verdict;
    local.inf_distributive = check_inf_distributivity(m, cap).verdict;
    hyp = &local;
  }
  r.notes.push_back("hypotheses: O5 " + to_string(hyp->o5) + ", weak cancellation " +
                    to_string(hyp->weak_cancellation) + ", inf-distributivity " +
                    to_string(hyp->inf_distributive));
  bool hyp_ok = hyp->o5 == Verdict::Holds && hyp->weak_cancellation == Verdict::Holds &&
                hyp->inf_distributive == Verdict::Holds;
  if (!hyp_ok)
    r.notes.push_back("hypothesis failure: conclusion checked empirically only");

  DivisibilityQuery weak{k, n, true, false};
  DivisibilityResult w = is_divisible(m, x, weak, cap);
  if (!w.report.holds()) {
    r.notes.push_back("x is not weakly (" + std::to_string(k) + "," + std::to_string(n) +
                      ")-divisible on the cap; implication vacuous");
    return r;
  }

  std::int64_t N = constant_N_cugg(k, n);
  std::optional<Element> ystar = maximal_witness(m, x, k);
  std::vector<Element> cand;
  if (!ystar) {
    Universe u = Universe::build(m, cap);
    for (const Element& e : u.elems)
      if (m.leq(m.nmul(k, e), x)) cand.push_back(e);
  }

  std::int64_t minimal_plain = 0;
  for (const auto& c : w.certificates) {
    const Element& xp = c.x_prime;
    ++r.tuples_examined;
    std::optional<std::int64_t> best;
    if (ystar) {
      best = m.dominates(xp, *ystar, N);
    } else {
      for (const Element& y : cand) {
        auto nn = m.dominates(xp, y, N);
        if (nn && (!best || *nn < *best)) best = *nn;
        if (best && *best <= 1) break;
      }
    }
    if (!best) {
      r.fail(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                  "weakly divisible instance admits no plain witness with N <= " +
                      std::to_string(N)));
      continue;
    }
    minimal_plain = std::max(minimal_plain, *best);
  }
  r.notes.push_back("paper bound N = " + std::to_string(N) + ", minimal plain N = " +
                    std::to_string(minimal_plain));
  return r;
}

CheckReport is_soft(const CuModel& m, const Element& x, const Cap& cap) {
  CheckReport r{"soft", m.describe()};
  Universe u = Universe::build(m, cap);
  std::int64_t k_bound = std::max<std::int64_t>(cap.search_bound,
                                                cap.ceiling * cap.denominator + 2);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!m.way_below(u.elems[i], x)) continue;
    const Element& xp = u.elems[i];
    ++r.tuples_examined;
    bool found = false;
    for (std::int64_t k = 1; k <= k_bound && !found; ++k)
      if (m.leq(m.nmul(k + 1, xp), m.nmul(k, x))) found = true;
    if (!found) {
      r.fail(bind({{"x", m.literal(x)}, {"x'", m.literal(xp)}},
                  "(k+1)x' <= kx has no k up to " + std::to_string(k_bound)));
      if (r.counterexamples.size() > 5) return r;
    }
  }
  return r;
}

CheckReport check_soft_sum(const CuModel& m, const std::vector<Element>& prefix, const Cap& cap) {
  CheckReport r{"soft-sum", m.describe()};
  if (prefix.empty()) throw std::invalid_argument("soft-sum: empty prefix");
  for (std::size_t j = 0; j + 1 < prefix.size(); ++j) {
    auto n = m.dominates(prefix[j], prefix[j + 1], cap.search_bound);
    if (!n) {
      r.fail(bind({{"x_j", m.literal(prefix[j])}, {"x_j+1", m.literal(prefix[j + 1])}},
                  "domination premise x_j <= n*x_{j+1} fails"));
      return r;
    }
  }
  Element sum = m.zero();
  for (const Element& e : prefix) sum = m.add(sum, e);
  sum = m.add(sum, m.saturate(prefix.back()));  // infinite tail convention
  r.notes.push_back("saturated sum = " + m.literal(sum));
  CheckReport soft = is_soft(m, sum, cap);
  r.verdict = soft.verdict;
  r.counterexamples = soft.counterexamples;
  r.tuples_examined += soft.tuples_examined;
  return r;
}

std::optional<Element> find_small_soft(const CuModel& m, const Element& x, std::int64_t n,
                                       const Cap& cap) {
  if (!m.is_full(x))
    throw std::invalid_argument("find_small_soft: x must be full");
  Universe u = Universe::build(m, cap);
  for (const Element& z : u.elems) {
    if (z == m.zero()) continue;
    if (!m.leq(m.nmul(n, z), x)) continue;
    if (!m.is_full(z)) continue;
    if (!is_soft(m, z, cap).holds()) continue;
    return z;
  }
  return std::nullopt;
}

}  // namespace cucalc
