#include <doctest.h>

#include <algorithm>
#include <map>

#include "cucalc/alpha.hpp"
#include "cucalc/functionals.hpp"
#include "cucalc/modeltext.hpp"

using namespace cucalc;

namespace {
Element lit(const CuModel& m, const std::string& s) { return m.parse_literal(s); }
Functional w2(const CuModel& m, const std::string& a, const std::string& b) {
  return Functional::weights(m, {ExtRat::parse(a), ExtRat::parse(b)});
}

// Test-side miner: every additive, order-preserving, chain-continuous value
// table on the cap must be a weight functional. Forced values (sums of
// earlier elements) are propagated; free values range over the grid.
std::vector<std::map<std::string, ExtRat>> mine_functionals(const CuModel& m, const Cap& cap) {
  auto elems = m.enumerate(cap);
  std::vector<ExtRat> grid;
  for (std::int64_t i = 0; i <= cap.ceiling * cap.denominator; ++i)
    grid.push_back(ExtRat(i, cap.denominator));
  grid.push_back(ExtRat::infinity());

  auto index_of = [&](const Element& e) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return i;
    return std::nullopt;
  };

  std::vector<std::map<std::string, ExtRat>> out;
  std::vector<ExtRat> vals(elems.size(), ExtRat(0));
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      for (std::size_t j = 0; j <= upto; ++j) {
        auto s = index_of(m.add(elems[i], elems[j]));
        if (s && *s <= upto && vals[*s] != vals[i] + vals[j]) return false;
        if (m.leq(elems[i], elems[j]) && !(vals[i] <= vals[j])) return false;
      }
      // continuity along the saturated chain n * e_i
      auto s = index_of(m.saturate(elems[i]));
      if (s && *s <= upto) {
        ExtRat limit = vals[i].is_zero() ? ExtRat(0) : ExtRat::infinity();
        if (vals[*s] != limit) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == elems.size()) {
      std::map<std::string, ExtRat> f;
      for (std::size_t i = 0; i < elems.size(); ++i) f[m.literal(elems[i])] = vals[i];
      out.push_back(std::move(f));
      return;
    }
    if (elems[pos] == m.zero()) {
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
  return out;
}
}  // namespace

TEST_CASE("functional evaluation with the zero-times-infinity convention") {
  CuModel m = builtin_model("nbar2");
  CHECK(evaluate(w2(m, "1", "0"), lit(m, "(2,inf)")) == ExtRat(2));
  CHECK(evaluate(w2(m, "1", "1"), lit(m, "(2,3)")) == ExtRat(5));
  CHECK(evaluate(w2(m, "0", "1"), lit(m, "(inf,0)")) == ExtRat(0));
  CHECK(evaluate(w2(m, "inf", "0"), lit(m, "(0,3)")) == ExtRat(0));
  CHECK(evaluate(w2(m, "inf", "0"), lit(m, "(1,3)")).is_infinite());
}

TEST_CASE("basis contains the zero functional and the point evaluations") {
  CuModel m = builtin_model("nbar2");
  auto basis = functional_basis(m);
  REQUIRE(basis.size() == 5);  // zero, two point masses, two infinite masses
  CHECK(basis[0].is_zero());
  CHECK(basis[1] == w2(m, "1", "0"));
  CHECK(basis[2] == w2(m, "0", "1"));
  // every grid functional is the obvious nonnegative combination of point
  // masses: weights act coordinatewise by construction
  for (const auto& lambda : functional_grid(m, Cap(1, 1)))
    for (const Element& x : m.enumerate(Cap(1, 1))) {
      ExtRat acc(0);
      for (std::size_t p = 0; p < 2; ++p)
        acc = acc + lambda.data()[p] * evaluate(basis[1 + p], x);
      CHECK(acc == evaluate(lambda, x));
    }
}

TEST_CASE("every mined functional on a small cap is a weight functional") {
  for (const char* name : {"nbar", "nbar2", "chain2"}) {
    CuModel m = builtin_model(name);
    Cap cap(2, 1);
    auto mined = mine_functionals(m, cap);
    INFO(name, ": ", mined.size(), " functionals mined");
    CHECK(mined.size() >= 2);
    std::size_t npts = m.zero().vals().size();
    for (const auto& f : mined) {
      // recover candidate weights from the indicator-like elements and
      // compare extensionally
      std::vector<ExtRat> w(npts, ExtRat(0));
      // recover weights from the top of the poset down: the value at the
      // principal up-set indicator of p is w_p plus the weights above p
      std::vector<std::size_t> order(npts);
      for (std::size_t i = 0; i < npts; ++i) order[i] = i;
      auto& lsc0 = dynamic_cast<const LscModel&>(m.impl());
      std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        std::size_t above_i = 0, above_j = 0;
        for (std::size_t q = 0; q < npts; ++q) {
          if (lsc0.poset().leq(i, q)) ++above_i;
          if (lsc0.poset().leq(j, q)) ++above_j;
        }
        return above_i < above_j;
      });
      for (std::size_t p : order) {
        // the smallest element with value 1 at p and minimal elsewhere
        std::vector<Scalar> v;
        auto& lsc = dynamic_cast<const LscModel&>(m.impl());
        for (std::size_t q = 0; q < npts; ++q) {
          bool up = lsc.poset().leq(p, q);
          v.push_back(Scalar::nat(ExtRat(up ? 1 : 0)));
        }
        Element chi = lsc.from_values(v);
        ExtRat sum = f.at(m.literal(chi));
        // subtract the strictly-above part, recoverable by upward recursion
        for (std::size_t q = 0; q < npts; ++q)
          if (q != p && lsc.poset().leq(p, q)) sum = sum.monus(w[q]);
        w[p] = sum;
      }
      Functional lambda = Functional::weights(m, w);
      for (const Element& x : m.enumerate(cap)) {
        INFO("weights disagree at ", m.literal(x));
        CHECK(evaluate(lambda, x) == f.at(m.literal(x)));
      }
    }
  }
}

TEST_CASE("functional extension by infinity off the ideal") {
  CuModel m = builtin_model("nbar2");
  Ideal ia = ideal_from_open(m, 0b01);  // support {a}
  CuModel sub = ideal_submodel(ia);
  Functional delta = Functional::weights(sub, {ExtRat(1)});
  Functional ext = extend_functional(m, ia, delta);
  CHECK(ext == w2(m, "1", "inf"));
  CHECK(evaluate(ext, lit(m, "(3,0)")) == ExtRat(3));
  CHECK(evaluate(ext, lit(m, "(3,1)")).is_infinite());

  // whole-model ideal: extension is the identity reading of the weights
  Ideal whole = ideal_from_open(m, 0b11);
  Functional lw = extend_functional(m, whole, w2(m, "1", "2"));
  CHECK(lw == w2(m, "1", "2"));

  // zero ideal: the extension vanishes at zero and is infinite elsewhere
  Ideal zero = ideal_from_open(m, 0);
  Functional z = extend_functional(m, zero, w2(m, "0", "0"));
  CHECK(evaluate(z, m.zero()) == ExtRat(0));
  CHECK(evaluate(z, lit(m, "(0,1)")).is_infinite());
}

TEST_CASE("densely finite functionals") {
  CuModel m = builtin_model("nbar2");
  CHECK(is_densely_finite(m, w2(m, "1", "2"), Cap(2, 1)));
  CHECK_FALSE(is_densely_finite(m, w2(m, "inf", "0"), Cap(2, 1)));
  CHECK(is_densely_finite(m, w2(m, "0", "0"), Cap(2, 1)));
}

TEST_CASE("edwards condition on lsc models") {
  CuModel m = builtin_model("nbar2");
  Cap cap(3, 2);
  // documented instance: w = (1,1), x = (2,0), y = (0,3): both sides vanish
  {
    Functional lambda = w2(m, "1", "1");
    Element x = lit(m, "(2,0)"), y = lit(m, "(0,3)");
    ExtRat rhs(0);
    for (const Element& z : m.enumerate(cap))
      if (m.leq(z, x) && m.leq(z, y)) rhs = max(rhs, evaluate(lambda, z));
    CHECK(rhs == ExtRat(0));
    CHECK(check_edwards(m, lambda, cap).holds());
  }
  for (const auto& lambda : {w2(m, "1", "0"), w2(m, "1", "2"), w2(m, "inf", "1")})
    CHECK(check_edwards(m, lambda, cap).holds());

  CuModel chain = builtin_model("chain2");
  for (const auto& lambda :
       {Functional::weights(chain, {ExtRat(1), ExtRat(0)}),
        Functional::weights(chain, {ExtRat(1, 2), ExtRat(1)})})
    CHECK(check_edwards(chain, lambda, Cap(3, 2)).holds());
}

TEST_CASE("ranks read off the value table and collapse the zcu layers") {
  CuModel m = builtin_model("nbar2");
  RankFunction r = rank(m, lit(m, "(2,inf)"));
  CHECK(r.values()[0] == ExtRat(2));
  CHECK(r.values()[1].is_infinite());
  CHECK(rank(m, m.zero()).values() == std::vector<ExtRat>{ExtRat(0), ExtRat(0)});

  CuModel zcu = builtin_model("zcu");
  CHECK(rank(zcu, lit(zcu, "c3")) == rank(zcu, lit(zcu, "s3")));

  // duality: evaluate(rank(x), lambda) = lambda(x) on the grid
  for (const Element& x : m.enumerate(Cap(2, 1)))
    for (const auto& lambda : functional_grid(m, Cap(1, 2)))
      CHECK(rank(m, x)(lambda) == evaluate(lambda, x));
}

TEST_CASE("hat preserves infima on lsc models") {
  for (const char* name : {"nbar", "nbar2", "chain2", "zcu"}) {
    INFO(name);
    CHECK(check_hat_preserves_inf(builtin_model(name), Cap(3, 2)).holds());
  }
}

TEST_CASE("hat and infima on the torsion shadow: element level fails, dual level holds") {
  CuModel t = builtin_model("torsion");
  CheckReport r = check_hat_preserves_inf(t, Cap(4, 1));
  CHECK(r.verdict == Verdict::Fails);
  bool element_fail = false, dual_hold = false;
  for (const auto& n : r.notes) {
    if (n.find("element-level identities: fail") != std::string::npos) element_fail = true;
    if (n.find("dual-level identities (infima in the rank cone): hold") != std::string::npos)
      dual_hold = true;
  }
  CHECK(element_fail);
  CHECK(dual_hold);

  // the documented pair: 2e^2f = 2e as elements while 2(e^f) = 0, yet the
  // rank-cone meets agree: 2(e-hat ^ f-hat) = (2e-hat)^(2f-hat)
  Element e = t.parse_literal("e"), f = t.parse_literal("f");
  CHECK(*t.infimum(t.nmul(2, e), t.nmul(2, f)) == t.nmul(2, e));
  CHECK(t.nmul(2, *t.infimum(e, f)) == t.zero());
  RankFunction re = rank(t, e), rf = rank(t, f);
  CHECK(re.pointwise_min(rf).scaled(ExtRat(2)) ==
        re.scaled(ExtRat(2)).pointwise_min(rf.scaled(ExtRat(2))));
}

TEST_CASE("chisels") {
  // one point: the chisel at the point mass is the identity on the ray and
  // lies in the realification
  CuModel pt = builtin_model("nbar");
  Functional delta = Functional::weights(pt, {ExtRat(1)});
  Chisel c = chisel(pt, delta, Cap(3, 4));
  CHECK(c.in_realification);
  for (std::size_t g = 0; g < c.fn.grid().size(); ++g) {
    const Functional& mu = c.fn.grid()[g];
    if (mu.is_zero()) CHECK(c.fn.values()[g] == ExtRat(0));
    else CHECK(c.fn.values()[g] == mu.data()[0]);
  }

  // the chisel at the zero functional is zero at zero and infinite elsewhere
  Chisel c0 = chisel(pt, Functional::weights(pt, {ExtRat(0)}), Cap(2, 2));
  for (std::size_t g = 0; g < c0.fn.grid().size(); ++g)
    CHECK(c0.fn.values()[g] == (c0.fn.grid()[g].is_zero() ? ExtRat(0) : ExtRat::infinity()));

  // off the ray the chisel is infinite
  CuModel m2 = builtin_model("nbar2");
  Chisel ca = chisel(m2, w2(m2, "1", "0"), Cap(2, 2));
  for (std::size_t g = 0; g < ca.fn.grid().size(); ++g) {
    const Functional& mu = ca.fn.grid()[g];
    if (mu == w2(m2, "0", "1")) CHECK(ca.fn.values()[g].is_infinite());
  }

  // a non-extreme functional is rejected
  CHECK_THROWS_AS(chisel(m2, w2(m2, "1", "1"), Cap(2, 2)), std::invalid_argument);

  // chisel linearity on the ray grid: additive and homogeneous where finite
  for (std::size_t g = 0; g < ca.fn.grid().size(); ++g) {
    const Functional& mu = ca.fn.grid()[g];
    ExtRat v = ca.fn.values()[g];
    if (v.is_infinite()) continue;
    Functional mu2 = mu.scaled(ExtRat(2));
    for (std::size_t h = 0; h < ca.fn.grid().size(); ++h)
      if (ca.fn.grid()[h] == mu2) CHECK(ca.fn.values()[h] == v * ExtRat(2));
  }
}

TEST_CASE("table functionals on the diamond collapse to the two extremes") {
  CuModel d = builtin_model("diamond");
  auto grid = functional_grid(d, Cap(2, 2));
  // additivity over the collapsing sums forces lambda = 0 or infinity off 0
  REQUIRE(grid.size() == 2);
  for (const auto& lambda : grid)
    for (const Element& x : d.enumerate(Cap(2, 2))) {
      if (x == d.zero()) CHECK(evaluate(lambda, x) == ExtRat(0));
      else {
        bool ok = evaluate(lambda, x) == ExtRat(0) || evaluate(lambda, x).is_infinite();
        CHECK(ok);
      }
    }
}

TEST_CASE("rank-cone shadows of the compact containment facts") {
  for (const char* name : {"nbar2", "chain2", "zcu"}) {
    CuModel m = builtin_model(name);
    Cap cap(3, 2);
    auto elems = m.enumerate(cap);
    auto grid = functional_grid(m, Cap(2, 2));

    for (const Element& x : elems)
      for (const Element& y : elems) {
        // scaled domination with a gap: x << y and s < t give
        // s*x-hat <= t*y-hat, with x-hat finite on densely finite lambdas
        if (m.way_below(x, y)) {
          RankFunction rx = rank(m, x), ry = rank(m, y);
          CHECK(rx.scaled(ExtRat(1, 2)).leq(ry.scaled(ExtRat(3, 4))));
          CHECK(rx.scaled(ExtRat(2)).leq(ry.scaled(ExtRat(3))));
          for (const auto& lambda : grid)
            if (is_densely_finite(m, lambda, cap)) CHECK(rx(lambda).is_finite());
        }
        // infinite domination transfers faithfully to the rank side
        bool elem_side = m.leq(x, m.saturate(y));
        bool rank_side = rank(m, x).leq(rank(m, y).scaled(ExtRat::infinity()));
        INFO(name, ": ", m.literal(x), " vs ", m.literal(y));
        CHECK(elem_side == rank_side);
      }
  }

  // the backward direction of the saturation fact mirrors the extension
  // argument: the zero-on-the-ideal functional separates
  CuModel m = builtin_model("nbar2");
  Ideal ia = ideal_from_open(m, 0b01);
  CuModel sub = ideal_submodel(ia);
  Functional zero_on = extend_functional(m, ia, Functional::weights(sub, {ExtRat(0)}));
  Element x = m.parse_literal("(0,1)"), y = m.parse_literal("(2,0)");
  CHECK_FALSE(m.leq(x, m.saturate(y)));
  CHECK(evaluate(zero_on, y) == ExtRat(0));         // y sits inside the ideal
  CHECK(evaluate(zero_on, x).is_infinite());        // x escapes, the functional sees it
}

TEST_CASE("restriction of full rank functions to normalized functionals is injective") {
  CuModel m = builtin_model("nbar2");
  Element u = m.parse_literal("(1,1)");
  Cap cap(2, 2);
  auto grid = rank_grid(m, cap);
  std::vector<std::size_t> full;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    bool positive = true;
    for (const auto& v : grid[i].values())
      if (v.is_zero()) positive = false;
    if (positive) full.push_back(i);
  }
  REQUIRE(full.size() >= 3);
  // normalized functionals: weights with w . u = 1, vertices suffice
  std::vector<Functional> normalized = {
      Functional::weights(m, {ExtRat(1), ExtRat(0)}),
      Functional::weights(m, {ExtRat(0), ExtRat(1)}),
      Functional::weights(m, {ExtRat(1, 2), ExtRat(1, 2)})};
  for (std::size_t a : full)
    for (std::size_t b : full) {
      if (a == b) continue;
      bool same_on_normalized = true;
      for (const auto& lambda : normalized)
        if (grid[a](lambda) != grid[b](lambda)) same_on_normalized = false;
      INFO(grid[a].str(), " vs ", grid[b].str());
      CHECK_FALSE(same_on_normalized);
    }
}

TEST_CASE("chisel additivity on the functional grid") {
  CuModel m = builtin_model("nbar2");
  Functional lambda = w2(m, "1", "0");
  Chisel c = chisel(m, lambda, Cap(2, 2));
  const auto& grid = c.fn.grid();
  auto value_at = [&](const Functional& mu) -> std::optional<ExtRat> {
    for (std::size_t g = 0; g < grid.size(); ++g)
      if (grid[g] == mu) return c.fn.values()[g];
    return std::nullopt;
  };
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j) {
      auto sum = value_at(grid[i].plus(grid[j]));
      if (!sum) continue;
      CHECK(*sum == c.fn.values()[i] + c.fn.values()[j]);
    }
}

TEST_CASE("weight functionals are continuous along encoded chains") {
  for (const char* name : {"nbar2", "chain2", "zcu"}) {
    CuModel m = builtin_model(name);
    Cap cap(2, 2);
    auto elems = m.enumerate(cap);
    for (const auto& lambda : functional_grid(m, Cap(1, 2)))
      for (const Element& a : elems)
        for (const Element& b : elems) {
          ExtRat at_sup = evaluate(lambda, m.sup_chain(a, b));
          ExtRat la = evaluate(lambda, a), lb = evaluate(lambda, b);
          ExtRat limit = lb.is_zero() ? la : ExtRat::infinity();
          INFO(name, " ", lambda.str(), " a=", m.literal(a), " b=", m.literal(b));
          CHECK(at_sup == limit);
        }
  }
}

TEST_CASE("rank evaluation is additive and homogeneous in the weight vector") {
  CuModel m = builtin_model("nbar2");
  auto grid = functional_grid(m, Cap(1, 2));
  for (const Element& x : m.enumerate(Cap(2, 1))) {
    RankFunction rx = rank(m, x);
    for (const auto& l1 : grid)
      for (const auto& l2 : grid) {
        CHECK(rx(l1.plus(l2)) == rx(l1) + rx(l2));
      }
    for (const auto& l1 : grid) CHECK(rx(l1.scaled(ExtRat(3, 2))) == rx(l1) * ExtRat(3, 2));
  }
}
