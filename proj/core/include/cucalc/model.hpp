#ifndef CUCALC_MODEL_HPP
#define CUCALC_MODEL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cucalc/poset.hpp"
#include "cucalc/scalar.hpp"

namespace cucalc {

class ModelImpl;
class CuModel;
struct Cap;

/// A member of a concrete Cu-semigroup model. Elements are immutable value
/// objects tagged with the model they belong to; every operation checks the
/// tag and throws std::invalid_argument on a mismatch.
class Element {
public:
  Element() = default;

  const ModelImpl* tag() const { return model_; }
  const std::vector<Scalar>& vals() const { return vals_; }
  std::uint64_t code() const { return code_; }

  bool operator==(const Element& o) const {
    return model_ == o.model_ && vals_ == o.vals_ && code_ == o.code_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

private:
  friend class ModelImpl;
  const ModelImpl* model_ = nullptr;
  std::vector<Scalar> vals_;   // pointwise payload (lsc-family, quotients)
  std::uint64_t code_ = 0;     // packed payload (table, torsion)
};

enum class ModelKind { Lsc, Table, Torsion, Quotient };

class ModelImpl {
public:
  virtual ~ModelImpl() = default;

  virtual ModelKind kind() const = 0;
  virtual std::string describe() const = 0;

  virtual Element zero() const = 0;
  virtual bool leq(const Element& x, const Element& y) const = 0;
  virtual Element add(const Element& x, const Element& y) const = 0;
  virtual bool way_below(const Element& x, const Element& y) const = 0;
  /// Supremum of the chain x_n = a + n*b.
  virtual Element sup_chain(const Element& a, const Element& b) const = 0;
  /// Greatest lower bound, when one exists in the model.
  virtual std::optional<Element> infimum(const Element& x, const Element& y) const = 0;
  /// Least upper bound, when one exists in the model.
  virtual std::optional<Element> join(const Element& x, const Element& y) const = 0;
  virtual std::optional<Element> largest() const = 0;
  virtual Element nmul(std::int64_t n, const Element& x) const;

  /// All elements below cap.bound with coordinates on the cap grid, in the
  /// model's canonical enumeration order (witness searches and report
  /// ordering follow this order).
  virtual std::vector<Element> enumerate(const Cap& cap) const = 0;

  virtual std::string literal(const Element& x) const = 0;
  virtual Element parse_literal(const std::string& text) const = 0;

  void require_mine(const Element& x) const;

protected:
  Element make(std::vector<Scalar> vals) const;
  Element make_code(std::uint64_t code) const;
};

/// Value handle for a model; cheap to copy, structurally immutable.
class CuModel {
public:
  CuModel() = default;
  explicit CuModel(std::shared_ptr<const ModelImpl> impl) : impl_(std::move(impl)) {}

  const ModelImpl& impl() const { return *impl_; }
  std::shared_ptr<const ModelImpl> share() const { return impl_; }
  bool valid() const { return impl_ != nullptr; }
  bool same_as(const CuModel& o) const { return impl_.get() == o.impl_.get(); }

  ModelKind kind() const { return impl_->kind(); }
  std::string describe() const { return impl_->describe(); }
  Element zero() const { return impl_->zero(); }
  bool leq(const Element& x, const Element& y) const { return impl_->leq(x, y); }
  Element add(const Element& x, const Element& y) const { return impl_->add(x, y); }
  bool way_below(const Element& x, const Element& y) const { return impl_->way_below(x, y); }
  bool is_compact(const Element& x) const { return impl_->way_below(x, x); }
  Element sup_chain(const Element& a, const Element& b) const { return impl_->sup_chain(a, b); }
  std::optional<Element> infimum(const Element& x, const Element& y) const {
    return impl_->infimum(x, y);
  }
  std::optional<Element> join(const Element& x, const Element& y) const {
    return impl_->join(x, y);
  }
  std::optional<Element> largest() const { return impl_->largest(); }
  Element nmul(std::int64_t n, const Element& x) const { return impl_->nmul(n, x); }
  std::vector<Element> enumerate(const Cap& cap) const { return impl_->enumerate(cap); }
  std::string literal(const Element& x) const { return impl_->literal(x); }
  Element parse_literal(const std::string& text) const { return impl_->parse_literal(text); }

  /// inf x = sup_n n*x.
  Element saturate(const Element& x) const { return impl_->sup_chain(zero(), x); }
  /// x is full when inf x dominates every element (decided against the
  /// model's largest element).
  bool is_full(const Element& x) const;

  /// Minimal n with x <= n*y, searched up to `bound`. Lsc-family models are
  /// decided in closed form first; nullopt means no n up to the bound works.
  std::optional<std::int64_t> dominates(const Element& x, const Element& y,
                                        std::int64_t bound = 64) const;

private:
  std::shared_ptr<const ModelImpl> impl_;
};

// --- concrete families ----------------------------------------------------

/// Monotone functions on a finite poset with values in a per-point scalar
/// semigroup; order, addition and suprema are pointwise.
class LscModel : public ModelImpl {
public:
  LscModel(FinitePoset poset, std::vector<ScalarKind> kinds);

  ModelKind kind() const override { return ModelKind::Lsc; }
  std::string describe() const override;
  Element zero() const override;
  bool leq(const Element& x, const Element& y) const override;
  Element add(const Element& x, const Element& y) const override;
  bool way_below(const Element& x, const Element& y) const override;
  Element sup_chain(const Element& a, const Element& b) const override;
  std::optional<Element> infimum(const Element& x, const Element& y) const override;
  std::optional<Element> join(const Element& x, const Element& y) const override;
  std::optional<Element> largest() const override;
  std::vector<Element> enumerate(const Cap& cap) const override;
  std::string literal(const Element& x) const override;
  Element parse_literal(const std::string& text) const override;

  const FinitePoset& poset() const { return poset_; }
  const std::vector<ScalarKind>& kinds() const { return kinds_; }
  Element from_values(std::vector<Scalar> vals) const;
  bool is_monotone(const std::vector<Scalar>& vals) const;

private:
  FinitePoset poset_;
  std::vector<ScalarKind> kinds_;
};

/// An explicit finite commutative monoid with a declared partial order.
/// Increasing sequences stabilize, so every element is compact.
class TableModel : public ModelImpl {
public:
  TableModel(std::vector<std::string> names, std::size_t zero,
             std::vector<std::vector<std::size_t>> add,
             std::vector<std::pair<std::size_t, std::size_t>> order);

  ModelKind kind() const override { return ModelKind::Table; }
  std::string describe() const override;
  Element zero() const override;
  bool leq(const Element& x, const Element& y) const override;
  Element add(const Element& x, const Element& y) const override;
  bool way_below(const Element& x, const Element& y) const override;
  Element sup_chain(const Element& a, const Element& b) const override;
  std::optional<Element> infimum(const Element& x, const Element& y) const override;
  std::optional<Element> join(const Element& x, const Element& y) const override;
  std::optional<Element> largest() const override;
  std::vector<Element> enumerate(const Cap& cap) const override;
  std::string literal(const Element& x) const override;
  Element parse_literal(const std::string& text) const override;

  std::size_t size() const { return names_.size(); }
  Element at(std::size_t i) const;

private:
  bool leq_idx(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  std::vector<std::string> names_;
  std::size_t zero_;
  std::vector<std::vector<std::size_t>> add_;
  std::vector<char> leq_;
};

/// The two-generator torsion monoid with the relation 2e = 2f, in exact
/// normal form k*(2e) + r with r in {0, e, f, e+f}, completed by a single
/// non-compact top element (the supremum of every unbounded chain).
/// Arithmetic is exact for all k; the cap only bounds enumeration.
class TorsionModel : public ModelImpl {
public:
  TorsionModel() = default;

  ModelKind kind() const override { return ModelKind::Torsion; }
  std::string describe() const override { return "torsion(2e=2f)"; }
  Element zero() const override;
  bool leq(const Element& x, const Element& y) const override;
  Element add(const Element& x, const Element& y) const override;
  bool way_below(const Element& x, const Element& y) const override;
  Element sup_chain(const Element& a, const Element& b) const override;
  std::optional<Element> infimum(const Element& x, const Element& y) const override;
  std::optional<Element> join(const Element& x, const Element& y) const override;
  std::optional<Element> largest() const override;
  std::vector<Element> enumerate(const Cap& cap) const override;
  std::string literal(const Element& x) const override;
  Element parse_literal(const std::string& text) const override;

  Element gen_e() const;
  Element gen_f() const;
  Element top() const;
  Element from_counts(std::int64_t e_count, std::int64_t f_count) const;
  /// Total generator count 2s + |r|; top maps to nullopt.
  std::optional<std::int64_t> degree(const Element& x) const;

private:
  static constexpr std::uint64_t kTop = ~0ull;
  static std::int64_t deg_of(std::uint64_t code);
};

/// Canonical-representative quotient of an lsc-family model by the ideal of
/// functions vanishing off an upward-closed set. The representative of a
/// class is x + omega_I, i.e. x with value top on the ideal's support.
class QuotientModel : public ModelImpl {
public:
  QuotientModel(std::shared_ptr<const LscModel> base, std::uint32_t up_mask);

  ModelKind kind() const override { return ModelKind::Quotient; }
  std::string describe() const override;
  Element zero() const override;
  bool leq(const Element& x, const Element& y) const override;
  Element add(const Element& x, const Element& y) const override;
  bool way_below(const Element& x, const Element& y) const override;
  Element sup_chain(const Element& a, const Element& b) const override;
  std::optional<Element> infimum(const Element& x, const Element& y) const override;
  std::optional<Element> join(const Element& x, const Element& y) const override;
  std::optional<Element> largest() const override;
  std::vector<Element> enumerate(const Cap& cap) const override;
  std::string literal(const Element& x) const override;
  Element parse_literal(const std::string& text) const override;

  const LscModel& base() const { return *base_; }
  std::uint32_t up_mask() const { return mask_; }
  /// Canonical representative of a base element's class.
  Element canonical(const Element& base_elem) const;

private:
  std::shared_ptr<const LscModel> base_;
  std::uint32_t mask_;
};

// --- factories --------------------------------------------------------------

CuModel make_lsc(FinitePoset poset, ScalarKind kind);
CuModel make_lsc(FinitePoset poset, std::vector<ScalarKind> kinds);
/// One-point lsc model; the scalar semigroup itself.
CuModel make_scalar(ScalarKind kind);
/// Product of lsc-family models: the lsc model on the disjoint union poset.
CuModel make_product(const std::vector<CuModel>& factors);
CuModel make_table(std::vector<std::string> names, std::size_t zero,
                   std::vector<std::vector<std::size_t>> add,
                   std::vector<std::pair<std::size_t, std::size_t>> order);
CuModel make_torsion();

/// 4-element monoid 0 < x < z < top with all nontrivial sums equal to top;
/// almost-algebraic order fails at the triple (x, x, z).
CuModel crafted_no_o5_table();
/// 6-element diamond 0 < p,q < a,b < top: {a,b} has no greatest lower bound
/// and (p,q,a,b) has no Riesz interpolant.
CuModel crafted_diamond_table();

}  // namespace cucalc

#endif
