#ifndef CUCALC_FUNCTIONALS_HPP
#define CUCALC_FUNCTIONALS_HPP

#include <optional>

#include "cucalc/cap.hpp"
#include "cucalc/ideals.hpp"
#include "cucalc/model.hpp"
#include "cucalc/report.hpp"

namespace cucalc {

/// A functional on a model: additive, order-preserving, zero-preserving and
/// continuous along encoded chains. Lsc-family functionals are weight
/// vectors (lambda(x) = sum_p w_p * x(p), with 0*inf = 0); the torsion model
/// carries one slope per functional; finite tables use explicit value
/// tables.
class Functional {
public:
  enum class Repr { Weights, Slope, Table };

  static Functional weights(const CuModel& m, std::vector<ExtRat> w);
  static Functional slope(const CuModel& m, ExtRat t);
  static Functional table(const CuModel& m, std::vector<Element> domain,
                          std::vector<ExtRat> values);

  const CuModel& model() const { return model_; }
  Repr repr() const { return repr_; }
  const std::vector<ExtRat>& data() const { return data_; }

  ExtRat operator()(const Element& x) const;
  bool is_zero() const;
  Functional plus(const Functional& o) const;
  Functional scaled(const ExtRat& c) const;
  /// The rational c > 0 with *this = c * o, when one exists.
  std::optional<ExtRat> multiple_of(const Functional& o) const;

  bool operator==(const Functional& o) const;
  std::string str() const;

private:
  Functional(CuModel m, Repr r, std::vector<ExtRat> d)
      : model_(std::move(m)), repr_(r), data_(std::move(d)) {}
  CuModel model_;
  Repr repr_;
  std::vector<ExtRat> data_;
  std::vector<Element> domain_;  // Table repr
};

/// Cone generators: the zero functional, the point evaluations, and their
/// infinite multiples. Every grid functional is a nonnegative combination.
std::vector<Functional> functional_basis(const CuModel& m);

/// The finite quantification grid over F(S): weight vectors (or slopes, or
/// value tables) with entries in {0, 1/d, ..., ceiling, inf}.
std::vector<Functional> functional_grid(const CuModel& m, const Cap& cap);

ExtRat evaluate(const Functional& lambda, const Element& x);

/// lambda(x) finite whenever x is compactly below something; for weight
/// functionals this is exactly finiteness of all weights (cross-checked on
/// the cap).
bool is_densely_finite(const CuModel& m, const Functional& lambda, const Cap& cap);

/// Extension of a functional on the ideal (seen as the lsc model on the
/// support sub-poset) by infinity off the ideal.
CuModel ideal_submodel(const Ideal& I);
Functional extend_functional(const CuModel& m, const Ideal& I, const Functional& lambda_on_sub);

/// inf { l1(x) + l2(y) : lambda = l1 + l2 } = sup { lambda(z) : z <= x,y },
/// with the infimum computed over vertex splits of the weight vector (and
/// verified against sampled interior splits), for all cap pairs.
CheckReport check_edwards(const CuModel& m, const Functional& lambda, const Cap& cap);

/// Rank functions (the dual side). Canonical ranks carry one extended
/// rational per point (or a single degree scale on the torsion model);
/// chisels and table-model ranks are extensional over a functional grid.
class RankFunction {
public:
  static RankFunction canonical(const CuModel& m, std::vector<ExtRat> values);
  static RankFunction extensional(const CuModel& m, std::vector<Functional> grid,
                                  std::vector<ExtRat> values);

  const CuModel& model() const { return model_; }
  bool is_extensional() const { return extensional_; }
  const std::vector<ExtRat>& values() const { return values_; }
  const std::vector<Functional>& grid() const { return grid_; }

  ExtRat operator()(const Functional& lambda) const;
  RankFunction plus(const RankFunction& o) const;
  RankFunction scaled(const ExtRat& c) const;
  RankFunction pointwise_min(const RankFunction& o) const;
  bool leq(const RankFunction& o) const;
  bool operator==(const RankFunction& o) const;
  std::string str() const;

private:
  RankFunction(CuModel m, bool ext, std::vector<ExtRat> v, std::vector<Functional> g)
      : model_(std::move(m)), extensional_(ext), values_(std::move(v)), grid_(std::move(g)) {}
  CuModel model_;
  bool extensional_;
  std::vector<ExtRat> values_;
  std::vector<Functional> grid_;
};

/// The rank of x: evaluation at x as a function on the cone.
RankFunction rank(const CuModel& m, const Element& x);

/// f <= (1-eps)g for some eps > 0: per grid point, f vanishes, or g is
/// infinite, or f sits strictly below g.
bool rank_strictly_below(const RankFunction& f, const RankFunction& g);

/// (x^y)^ = x-hat ^ y-hat together with the n-fold identity
/// (n(x^y))^ = ((nx)^(ny))^ for n <= 4. On models where the element-level
/// infima degenerate the dual-level identity n(x-hat ^ y-hat) =
/// (n x-hat)^(n y-hat) is still verified and the element/dual discrepancy is
/// reported as a finding.
CheckReport check_hat_preserves_inf(const CuModel& m, const Cap& cap);

/// The chisel at an extreme densely finite functional: the extensional rank
/// function that is c at c*lambda, zero at 0 and infinite elsewhere.
struct Chisel {
  RankFunction fn;
  bool in_realification = false;  // grid-limit of x-hat/n terms (denominator <= 64)
};
Chisel chisel(const CuModel& m, const Functional& lambda, const Cap& cap);

}  // namespace cucalc

#endif
