#include "cucalc/functionals.hpp"

#include <algorithm>
#include <sstream>
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

const TorsionModel* as_torsion(const CuModel& m) {
  return dynamic_cast<const TorsionModel*>(&m.impl());
}
}  // namespace

Functional Functional::weights(const CuModel& m, std::vector<ExtRat> w) {
  if (m.kind() != ModelKind::Lsc && m.kind() != ModelKind::Quotient)
    throw std::invalid_argument("weight functionals require an lsc-family model");
  if (w.size() != m.zero().vals().size())
    throw std::invalid_argument("weight vector has wrong arity");
  return Functional(m, Repr::Weights, std::move(w));
}

Functional Functional::slope(const CuModel& m, ExtRat t) {
  if (!as_torsion(m)) throw std::invalid_argument("slope functionals require the torsion model");
  return Functional(m, Repr::Slope, {std::move(t)});
}

Functional Functional::table(const CuModel& m, std::vector<Element> domain,
                             std::vector<ExtRat> values) {
  if (domain.size() != values.size())
    throw std::invalid_argument("table functional: domain/value size mismatch");
  Functional f(m, Repr::Table, std::move(values));
  f.domain_ = std::move(domain);
  return f;
}

ExtRat Functional::operator()(const Element& x) const {
  model_.impl().require_mine(x);
  switch (repr_) {
    case Repr::Weights: {
      ExtRat acc(0);
      for (std::size_t p = 0; p < data_.size(); ++p)
        acc = acc + data_[p] * x.vals()[p].value();
      return acc;
    }
    case Repr::Slope: {
      auto tm = as_torsion(model_);
      auto d = tm->degree(x);
      if (!d) return data_[0].is_zero() ? ExtRat(0) : ExtRat::infinity();
      return ExtRat(*d) * data_[0];
    }
    case Repr::Table: {
      for (std::size_t i = 0; i < domain_.size(); ++i)
        if (domain_[i] == x) return data_[i];
      throw std::invalid_argument("table functional: element outside the stored domain");
    }
  }
  throw std::logic_error("Functional::operator()");
}

bool Functional::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Functional Functional::plus(const Functional& o) const {
  if (repr_ != o.repr_ || !model_.same_as(o.model_))
    throw std::invalid_argument("functional addition: representation mismatch");
  std::vector<ExtRat> d;
  for (std::size_t i = 0; i < data_.size(); ++i) d.push_back(data_[i] + o.data_[i]);
  Functional f(model_, repr_, std::move(d));
  f.domain_ = domain_;
  return f;
}

Functional Functional::scaled(const ExtRat& c) const {
  std::vector<ExtRat> d;
  for (const auto& v : data_) d.push_back(v * c);
  Functional f(model_, repr_, std::move(d));
  f.domain_ = domain_;
  return f;
}

std::optional<ExtRat> Functional::multiple_of(const Functional& o) const {
  if (repr_ != o.repr_ || data_.size() != o.data_.size()) return std::nullopt;
  // find the candidate ratio from the first position where o is nonzero and
  // finite, then verify everywhere
  std::optional<ExtRat> c;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (o.data_[i].is_zero() || o.data_[i].is_infinite()) continue;
    if (data_[i].is_infinite()) return std::nullopt;
    c = ExtRat(data_[i].num() * o.data_[i].den(), data_[i].den() * o.data_[i].num());
    break;
  }
  if (!c || c->is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i] * *c) return std::nullopt;
  return c;
}

bool Functional::operator==(const Functional& o) const {
  return model_.same_as(o.model_) && repr_ == o.repr_ && data_ == o.data_ &&
         domain_ == o.domain_;
}

std::string Functional::str() const {
  std::ostringstream os;
  switch (repr_) {
    case Repr::Weights: {
      os << "w(";
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i) os << ",";
        os << data_[i].str();
      }
      os << ")";
      break;
    }
    case Repr::Slope:
      os << "slope(" << data_[0].str() << ")";
      break;
    case Repr::Table: {
      os << "tbl(";
      for (std::size_t i = 0; i < data_.size(); ++i) {
        if (i) os << ",";
        os << data_[i].str();
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

ExtRat evaluate(const Functional& lambda, const Element& x) { return lambda(x); }

std::vector<Functional> functional_basis(const CuModel& m) {
  std::vector<Functional> out;
  switch (m.kind()) {
    case ModelKind::Lsc:
    case ModelKind::Quotient: {
      std::size_t n = m.zero().vals().size();
      out.push_back(Functional::weights(m, std::vector<ExtRat>(n, ExtRat(0))));
      for (std::size_t p = 0; p < n; ++p) {
        std::vector<ExtRat> w(n, ExtRat(0));
        w[p] = ExtRat(1);
        out.push_back(Functional::weights(m, w));
      }
      for (std::size_t p = 0; p < n; ++p) {
        std::vector<ExtRat> w(n, ExtRat(0));
        w[p] = ExtRat::infinity();
        out.push_back(Functional::weights(m, w));
      }
      return out;
    }
    case ModelKind::Torsion:
      out.push_back(Functional::slope(m, ExtRat(0)));
      out.push_back(Functional::slope(m, ExtRat(1)));
      out.push_back(Functional::slope(m, ExtRat::infinity()));
      return out;
    case ModelKind::Table:
      break;
  }
  throw std::invalid_argument("functional_basis: unsupported model variant");
}

namespace {

// Backtracking enumeration of all additive, order-preserving value tables on
// a finite table model; chains stabilize so continuity is automatic.
std::vector<Functional> table_functionals(const CuModel& m, const Cap& cap) {
  auto tbl = dynamic_cast<const TableModel*>(&m.impl());
  std::vector<Element> elems = m.enumerate(Cap(cap.ceiling, cap.denominator));
  std::size_t n = elems.size();
  std::vector<ExtRat> grid;
  for (std::int64_t i = 0; i <= cap.ceiling * cap.denominator; ++i)
    grid.push_back(ExtRat(i, cap.denominator));
  grid.push_back(ExtRat::infinity());

  auto index_of = [&](const Element& e) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (elems[i] == e) return i;
    throw std::logic_error("table element lookup");
  };
  std::size_t zero_idx = index_of(m.zero());

  std::vector<Functional> out;
  std::vector<ExtRat> vals(n, ExtRat(0));
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i)
      for (std::size_t j = 0; j <= upto; ++j) {
        std::size_t s = index_of(m.add(elems[i], elems[j]));
        if (s <= upto && vals[s] != vals[i] + vals[j]) return false;
        if (m.leq(elems[i], elems[j]) && !(vals[i] <= vals[j])) return false;
        if (m.leq(elems[j], elems[i]) && !(vals[j] <= vals[i])) return false;
      }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      out.push_back(Functional::table(m, elems, vals));
      return;
    }
    if (pos == zero_idx) {
      vals[pos] = ExtRat(0);
      if (consistent(pos)) self(self, pos + 1);
      return;
    }
    for (const ExtRat& g : grid) {
      vals[pos] = g;
      if (consistent(pos)) self(self, pos + 1);
    }
  };
  rec(rec, 0);
  (void)tbl;
  return out;
}

}  // namespace

std::vector<Functional> functional_grid(const CuModel& m, const Cap& cap) {
  std::vector<Functional> out;
  switch (m.kind()) {
    case ModelKind::Lsc:
    case ModelKind::Quotient: {
      std::size_t n = m.zero().vals().size();
      std::vector<ExtRat> grid;
      for (std::int64_t i = 0; i <= cap.ceiling * cap.denominator; ++i)
        grid.push_back(ExtRat(i, cap.denominator));
      grid.push_back(ExtRat::infinity());
      std::vector<ExtRat> w(n, ExtRat(0));
      auto rec = [&](auto&& self, std::size_t p) -> void {
        if (p == n) {
          out.push_back(Functional::weights(m, w));
          return;
        }
        for (const ExtRat& g : grid) {
          w[p] = g;
          self(self, p + 1);
        }
      };
      rec(rec, 0);
      return out;
    }
    case ModelKind::Torsion: {
      for (std::int64_t i = 0; i <= cap.ceiling * cap.denominator; ++i)
        out.push_back(Functional::slope(m, ExtRat(i, cap.denominator)));
      out.push_back(Functional::slope(m, ExtRat::infinity()));
      return out;
    }
    case ModelKind::Table:
      return table_functionals(m, cap);
  }
  throw std::invalid_argument("functional_grid: unsupported model variant");
}

bool is_densely_finite(const CuModel& m, const Functional& lambda, const Cap& cap) {
  if (lambda.repr() == Functional::Repr::Weights) {
    bool finite = true;
    for (const auto& w : lambda.data())
      if (w.is_infinite()) finite = false;
    // cross-check the closed form on the cap
    Universe u = Universe::build(m, cap);
    for (auto [i, j] : u.wb)
      if (lambda(u.elems[i]).is_infinite() && finite)
        throw std::logic_error("densely-finite closed form disagrees with the cap check");
    return finite;
  }
  Universe u = Universe::build(m, cap);
  for (auto [i, j] : u.wb)
    if (lambda(u.elems[i]).is_infinite()) return false;
  return true;
}

CuModel ideal_submodel(const Ideal& I) {
  auto lsc = dynamic_cast<const LscModel*>(&I.model.impl());
  if (!lsc) throw std::invalid_argument("ideal_submodel: lsc-family models only");
  std::uint32_t co_mask = 0;
  for (std::size_t p = 0; p < lsc->poset().size(); ++p)
    if (!(I.up_mask >> p & 1)) co_mask |= (1u << p);
  if (I.up_mask == 0) {
    // zero ideal: the one-point zero model is represented by the trivial
    // sub-poset on any single point with everything forced to zero by the
    // cap bound; callers use extend_functional directly instead
    throw std::invalid_argument("ideal_submodel: the zero ideal has no support points");
  }
  FinitePoset sub = lsc->poset().restrict_complement(co_mask);
  std::vector<ScalarKind> kinds;
  for (std::size_t p = 0; p < lsc->poset().size(); ++p)
    if (I.up_mask >> p & 1) kinds.push_back(lsc->kinds()[p]);
  return make_lsc(sub, kinds);
}

Functional extend_functional(const CuModel& m, const Ideal& I, const Functional& lambda_on_sub) {
  auto lsc = dynamic_cast<const LscModel*>(&m.impl());
  if (!lsc) throw std::invalid_argument("extend_functional: lsc-family models only");
  if (I.up_mask == 0) {
    // the zero ideal only carries the zero functional; its extension is zero
    // at zero and infinite elsewhere
    return Functional::weights(m, std::vector<ExtRat>(lsc->poset().size(), ExtRat::infinity()));
  }
  if (lambda_on_sub.repr() != Functional::Repr::Weights)
    throw std::invalid_argument("extend_functional: weight functionals only");
  std::vector<ExtRat> w(lsc->poset().size(), ExtRat::infinity());
  std::size_t sub_p = 0;
  for (std::size_t p = 0; p < lsc->poset().size(); ++p)
    if (I.up_mask >> p & 1) w[p] = lambda_on_sub.data()[sub_p++];
  if (sub_p != lambda_on_sub.data().size())
    throw std::invalid_argument("extend_functional: weight arity mismatch with the ideal");
  return Functional::weights(m, std::move(w));
}

CheckReport check_edwards(const CuModel& m, const Functional& lambda, const Cap& cap) {
  CheckReport r{"edwards", m.describe()};
  if (lambda.repr() != Functional::Repr::Weights)
    throw std::invalid_argument("check_edwards: weight functionals only");
  Universe u = Universe::build(m, cap);
  std::size_t npts = lambda.data().size();

  // vertex splits per point: a finite weight goes wholly to one side; an
  // infinite weight splits as (inf,0), (0,inf) or (inf,inf)
  std::vector<std::vector<std::pair<ExtRat, ExtRat>>> options(npts);
  for (std::size_t p = 0; p < npts; ++p) {
    const ExtRat& w = lambda.data()[p];
    if (w.is_infinite()) {
      options[p] = {{ExtRat::infinity(), ExtRat(0)},
                    {ExtRat(0), ExtRat::infinity()},
                    {ExtRat::infinity(), ExtRat::infinity()}};
    } else {
      options[p] = {{w, ExtRat(0)}, {ExtRat(0), w}};
    }
  }

  bool extreme_densely_finite = true;
  {
    std::size_t nonzero = 0;
    for (const auto& w : lambda.data()) {
      if (w.is_infinite()) extreme_densely_finite = false;
      if (!w.is_zero()) ++nonzero;
    }
    if (nonzero > 1) extreme_densely_finite = false;
  }

  for (std::size_t ix = 0; ix < u.size(); ++ix)
    for (std::size_t iy = ix; iy < u.size(); ++iy) {
      const Element &x = u.elems[ix], &y = u.elems[iy];
      ++r.tuples_examined;

      ExtRat lhs = ExtRat::infinity();
      std::vector<std::size_t> pick(npts, 0);
      auto rec = [&](auto&& self, std::size_t p, ExtRat acc1, ExtRat acc2) -> void {
        if (p == npts) {
          ExtRat v = acc1 + acc2;
          if (v < lhs) lhs = v;
          return;
        }
        for (const auto& [w1, w2] : options[p])
          self(self, p + 1, acc1 + w1 * x.vals()[p].value(), acc2 + w2 * y.vals()[p].value());
      };
      rec(rec, 0, ExtRat(0), ExtRat(0));

      // interior splits cannot undercut the vertex minimum; spot-check the
      // halving split
      {
        ExtRat acc(0);
        for (std::size_t p = 0; p < npts; ++p) {
          ExtRat half = lambda.data()[p].is_infinite()
                            ? ExtRat::infinity()
                            : ExtRat(lambda.data()[p].num(), lambda.data()[p].den() * 2);
          acc = acc + half * x.vals()[p].value() + half * y.vals()[p].value();
        }
        if (acc < lhs) {
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                      "interior split undercuts every vertex split"));
          continue;
        }
      }

      ExtRat rhs(0);
      for (std::size_t iz : u.below[ix]) {
        if (!u.le(iz, iy)) continue;
        ExtRat v = lambda(u.elems[iz]);
        if (rhs < v) rhs = v;
      }

      if (lhs != rhs) {
        r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                    "split infimum " + lhs.str() + " differs from common-lower-bound supremum " +
                        rhs.str()));
        if (r.counterexamples.size() > 10) return r;
      }
      if (extreme_densely_finite) {
        ExtRat mn = min(lambda(x), lambda(y));
        if (mn != rhs) {
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                      "extreme form min{l(x),l(y)} = " + mn.str() + " differs from " + rhs.str()));
        }
      }
    }
  if (extreme_densely_finite) r.notes.push_back("extreme densely finite form verified");
  r.notes.push_back("vertex attainment verified against the halving split");
  return r;
}

// --- RankFunction -----------------------------------------------------------

RankFunction RankFunction::canonical(const CuModel& m, std::vector<ExtRat> values) {
  return RankFunction(m, false, std::move(values), {});
}

RankFunction RankFunction::extensional(const CuModel& m, std::vector<Functional> grid,
                                       std::vector<ExtRat> values) {
  if (grid.size() != values.size())
    throw std::invalid_argument("extensional rank: grid/value size mismatch");
  return RankFunction(m, true, std::move(values), std::move(grid));
}

ExtRat RankFunction::operator()(const Functional& lambda) const {
  if (!extensional_) {
    switch (lambda.repr()) {
      case Functional::Repr::Weights: {
        ExtRat acc(0);
        for (std::size_t p = 0; p < values_.size(); ++p)
          acc = acc + lambda.data()[p] * values_[p];
        return acc;
      }
      case Functional::Repr::Slope:
        return values_[0] * lambda.data()[0];
      case Functional::Repr::Table:
        throw std::invalid_argument("canonical rank evaluated at a table functional");
    }
  }
  for (std::size_t i = 0; i < grid_.size(); ++i)
    if (grid_[i] == lambda) return values_[i];
  throw std::invalid_argument("rank function: functional outside the stored grid");
}

RankFunction RankFunction::plus(const RankFunction& o) const {
  if (extensional_ != o.extensional_)
    throw std::invalid_argument("rank addition: representation mismatch");
  std::vector<ExtRat> v;
  for (std::size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] + o.values_[i]);
  return RankFunction(model_, extensional_, std::move(v), grid_);
}

RankFunction RankFunction::scaled(const ExtRat& c) const {
  std::vector<ExtRat> v;
  for (const auto& x : values_) v.push_back(x * c);
  return RankFunction(model_, extensional_, std::move(v), grid_);
}

RankFunction RankFunction::pointwise_min(const RankFunction& o) const {
  std::vector<ExtRat> v;
  for (std::size_t i = 0; i < values_.size(); ++i) v.push_back(min(values_[i], o.values_[i]));
  return RankFunction(model_, extensional_, std::move(v), grid_);
}

bool RankFunction::leq(const RankFunction& o) const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!(values_[i] <= o.values_[i])) return false;
  return true;
}

bool RankFunction::operator==(const RankFunction& o) const {
  return extensional_ == o.extensional_ && values_ == o.values_;
}

std::string RankFunction::str() const {
  std::ostringstream os;
  os << (extensional_ ? "ext[" : "[");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ",";
    os << values_[i].str();
  }
  os << "]";
  return os.str();
}

RankFunction rank(const CuModel& m, const Element& x) {
  m.impl().require_mine(x);
  switch (m.kind()) {
    case ModelKind::Lsc:
    case ModelKind::Quotient: {
      std::vector<ExtRat> v;
      for (const Scalar& s : x.vals()) v.push_back(s.value());
      return RankFunction::canonical(m, std::move(v));
    }
    case ModelKind::Torsion: {
      auto tm = as_torsion(m);
      auto d = tm->degree(x);
      return RankFunction::canonical(m, {d ? ExtRat(*d) : ExtRat::infinity()});
    }
    case ModelKind::Table: {
      Cap grid_cap;  // defaults suffice for value tables
      auto grid = functional_grid(m, grid_cap);
      std::vector<ExtRat> vals;
      for (const auto& l : grid) vals.push_back(l(x));
      return RankFunction::extensional(m, std::move(grid), std::move(vals));
    }
  }
  throw std::logic_error("rank");
}

bool rank_strictly_below(const RankFunction& f, const RankFunction& g) {
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const ExtRat& fv = f.values()[i];
    const ExtRat& gv = g.values()[i];
    if (fv.is_zero()) continue;
    if (gv.is_infinite()) continue;
    if (!(fv < gv)) return false;
  }
  return true;
}

CheckReport check_hat_preserves_inf(const CuModel& m, const Cap& cap) {
  CheckReport r{"hat-preserves-inf", m.describe()};
  Universe u = Universe::build(m, cap);
  bool element_side_ok = true;
  bool dual_side_ok = true;
  for (std::size_t ix = 0; ix < u.size(); ++ix)
    for (std::size_t iy = ix; iy < u.size(); ++iy) {
      const Element &x = u.elems[ix], &y = u.elems[iy];
      ++r.tuples_examined;
      RankFunction rx = rank(m, x), ry = rank(m, y);
      RankFunction dual = rx.pointwise_min(ry);
      auto xy = m.infimum(x, y);
      if (xy) {
        if (!(rank(m, *xy) == dual)) {
          element_side_ok = false;
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}},
                      "(x^y)^ = " + rank(m, *xy).str() + " differs from x-hat ^ y-hat = " +
                          dual.str()));
        }
      }
      for (std::int64_t n = 2; n <= 4; ++n) {
        // dual-level identity always checked
        RankFunction lhs_dual = dual.scaled(ExtRat(n));
        RankFunction rhs_dual = rx.scaled(ExtRat(n)).pointwise_min(ry.scaled(ExtRat(n)));
        if (!(lhs_dual == rhs_dual)) {
          dual_side_ok = false;
          r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}, {"n", std::to_string(n)}},
                      "dual-level n-fold identity fails"));
        }
        // element-level version where the infima exist
        auto nxy = m.infimum(m.nmul(n, x), m.nmul(n, y));
        if (xy && nxy) {
          RankFunction lhs = rank(m, m.nmul(n, *xy));
          RankFunction rhs = rank(m, *nxy);
          if (!(lhs == rhs)) {
            element_side_ok = false;
            r.fail(bind({{"x", m.literal(x)}, {"y", m.literal(y)}, {"n", std::to_string(n)}},
                        "(n(x^y))^ = " + lhs.str() + " differs from ((nx)^(ny))^ = " + rhs.str() +
                            "; element infima n(x^y) = " + m.literal(m.nmul(n, *xy)) +
                            ", (nx)^(ny) = " + m.literal(*nxy)));
          }
        }
      }
      if (r.counterexamples.size() > 12) {
        r.notes.push_back("truncated after 12 findings");
        r.elapsed_seconds = 0;
        return r;
      }
    }
  r.notes.push_back(std::string("element-level identities: ") +
                    (element_side_ok ? "hold" : "fail"));
  r.notes.push_back(std::string("dual-level identities (infima in the rank cone): ") +
                    (dual_side_ok ? "hold" : "fail"));
  return r;
}

Chisel chisel(const CuModel& m, const Functional& lambda, const Cap& cap) {
  // extremeness: a weight functional is a scaled point evaluation
  bool extreme = false;
  if (lambda.repr() == Functional::Repr::Weights) {
    std::size_t nonzero = 0;
    bool inf = false;
    for (const auto& w : lambda.data()) {
      if (!w.is_zero()) ++nonzero;
      if (w.is_infinite()) inf = true;
    }
    extreme = nonzero <= 1 && !inf;
  } else if (lambda.repr() == Functional::Repr::Slope) {
    extreme = lambda.data()[0].is_finite();
  }
  if (!extreme)
    throw std::invalid_argument("chisel: functional is not extreme densely finite");

  auto grid = functional_grid(m, cap);
  std::vector<ExtRat> vals;
  for (const auto& mu : grid) {
    if (mu.is_zero()) {
      vals.push_back(ExtRat(0));
    } else if (lambda.is_zero()) {
      vals.push_back(ExtRat::infinity());
    } else if (auto c = mu.multiple_of(lambda)) {
      vals.push_back(*c);
    } else {
      vals.push_back(ExtRat::infinity());
    }
  }
  Chisel out{RankFunction::extensional(m, grid, vals), false};

  // grid-limit membership: the pointwise sup of the x-hat/n minorants must
  // reproduce the chisel on the grid (denominators up to 64)
  Universe u = Universe::build(m, cap);
  std::vector<ExtRat> sup(grid.size(), ExtRat(0));
  for (const Element& x : u.elems) {
    RankFunction rx = rank(m, x);
    for (std::int64_t n = 1; n <= 64; ++n) {
      bool minorant = true;
      std::vector<ExtRat> scaled(grid.size());
      for (std::size_t g = 0; g < grid.size() && minorant; ++g) {
        ExtRat v = rx(grid[g]);
        scaled[g] = v.is_infinite() ? v : ExtRat(v.num(), v.den() * n);
        if (!(scaled[g] <= out.fn.values()[g])) minorant = false;
      }
      if (!minorant) continue;
      for (std::size_t g = 0; g < grid.size(); ++g)
        if (sup[g] < scaled[g]) sup[g] = scaled[g];
    }
  }
  out.in_realification = sup == out.fn.values();
  return out;
}

}  // namespace cucalc
