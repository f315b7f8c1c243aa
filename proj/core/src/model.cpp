#include "cucalc/model.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "cucalc/cap.hpp"

namespace cucalc {

// --- ModelImpl --------------------------------------------------------------

void ModelImpl::require_mine(const Element& x) const {
  if (x.tag() != this)
    throw std::invalid_argument("element does not belong to this model");
}

Element ModelImpl::make(std::vector<Scalar> vals) const {
  Element e;
  e.model_ = this;
  e.vals_ = std::move(vals);
  return e;
}

Element ModelImpl::make_code(std::uint64_t code) const {
  Element e;
  e.model_ = this;
  e.code_ = code;
  return e;
}

Element ModelImpl::nmul(std::int64_t n, const Element& x) const {
  require_mine(x);
  if (n < 0) throw std::invalid_argument("nmul: negative multiplier");
  Element acc = zero();
  for (std::int64_t i = 0; i < n; ++i) acc = add(acc, x);
  return acc;
}

bool CuModel::is_full(const Element& x) const {
  auto top = largest();
  if (!top) return false;
  return saturate(x) == *top;
}

std::optional<std::int64_t> CuModel::dominates(const Element& x, const Element& y,
                                               std::int64_t bound) const {
  impl_->require_mine(x);
  impl_->require_mine(y);
  // Closed form on pointwise models: x <= n*y for some n iff y is nonzero
  // wherever x is, and infinite wherever x is. The minimal n is still found
  // by search so certificates re-verify.
  if (kind() == ModelKind::Lsc || kind() == ModelKind::Quotient) {
    for (std::size_t p = 0; p < x.vals().size(); ++p) {
      const ExtRat& xv = x.vals()[p].value();
      const ExtRat& yv = y.vals()[p].value();
      if (!xv.is_zero() && yv.is_zero()) return std::nullopt;
      if (xv.is_infinite() && yv.is_finite()) return std::nullopt;
    }
  }
  Element acc = zero();
  for (std::int64_t n = 0; n <= bound; ++n) {
    if (leq(x, acc)) return n;
    acc = add(acc, y);
  }
  return std::nullopt;
}

// --- LscModel ---------------------------------------------------------------

LscModel::LscModel(FinitePoset poset, std::vector<ScalarKind> kinds)
    : poset_(std::move(poset)), kinds_(std::move(kinds)) {
  if (kinds_.size() != poset_.size())
    throw std::invalid_argument("lsc: one scalar kind per point required");
}

std::string LscModel::describe() const {
  std::ostringstream os;
  os << "lsc[";
  for (std::size_t p = 0; p < poset_.size(); ++p) {
    if (p) os << ",";
    os << poset_.points()[p] << ":" << to_string(kinds_[p]);
  }
  os << "]";
  return os.str();
}

bool LscModel::is_monotone(const std::vector<Scalar>& vals) const {
  for (std::size_t p = 0; p < poset_.size(); ++p)
    for (std::size_t q = 0; q < poset_.size(); ++q)
      if (p != q && poset_.leq(p, q) && !vals[p].leq(vals[q])) return false;
  return true;
}

Element LscModel::from_values(std::vector<Scalar> vals) const {
  if (vals.size() != poset_.size())
    throw std::invalid_argument("lsc element: wrong arity");
  for (std::size_t p = 0; p < vals.size(); ++p)
    if (vals[p].kind() != kinds_[p])
      throw std::invalid_argument("lsc element: wrong scalar kind at point " +
                                  poset_.points()[p]);
  if (!is_monotone(vals))
    throw std::invalid_argument("lsc element: values not monotone along the poset");
  return make(std::move(vals));
}

Element LscModel::zero() const {
  std::vector<Scalar> v;
  for (auto k : kinds_) v.push_back(Scalar::zero_of(k));
  return make(std::move(v));
}

bool LscModel::leq(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    if (!x.vals()[p].leq(y.vals()[p])) return false;
  return true;
}

Element LscModel::add(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  v.reserve(x.vals().size());
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    v.push_back(x.vals()[p].add(y.vals()[p]));
  return make(std::move(v));
}

bool LscModel::way_below(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    if (!x.vals()[p].way_below(y.vals()[p])) return false;
  return true;
}

Element LscModel::sup_chain(const Element& a, const Element& b) const {
  require_mine(a);
  require_mine(b);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < a.vals().size(); ++p)
    v.push_back(a.vals()[p].add(b.vals()[p].saturate()));
  return make(std::move(v));
}

std::optional<Element> LscModel::infimum(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    v.push_back(x.vals()[p].inf(y.vals()[p]));
  // pointwise meet of monotone functions is monotone
  return make(std::move(v));
}

std::optional<Element> LscModel::join(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    v.push_back(x.vals()[p].join(y.vals()[p]));
  return make(std::move(v));
}

std::optional<Element> LscModel::largest() const {
  std::vector<Scalar> v;
  for (auto k : kinds_) v.push_back(Scalar::top_of(k));
  return make(std::move(v));
}

std::vector<Element> LscModel::enumerate(const Cap& cap) const {
  std::size_t n = poset_.size();
  std::vector<std::vector<Scalar>> grids;
  for (auto k : kinds_) grids.push_back(scalar_grid(k, cap.ceiling, cap.denominator));
  const Element* bound = cap.bound ? &*cap.bound : nullptr;
  if (bound) require_mine(*bound);

  std::vector<Element> out;
  std::vector<Scalar> cur(n, Scalar());
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      out.push_back(make(cur));
      return;
    }
    for (const Scalar& s : grids[p]) {
      if (bound && !s.leq(bound->vals()[p])) continue;
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        if (poset_.leq(q, p) && !cur[q].leq(s)) ok = false;
        if (poset_.leq(p, q) && !s.leq(cur[q])) ok = false;
      }
      if (!ok) continue;
      cur[p] = s;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::string LscModel::literal(const Element& x) const {
  require_mine(x);
  if (poset_.size() == 1) return x.vals()[0].str();
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < x.vals().size(); ++p) {
    if (p) os << ",";
    os << x.vals()[p].str();
  }
  os << ")";
  return os.str();
}

Element LscModel::parse_literal(const std::string& text) const {
  std::string t = text;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : t) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.size() != poset_.size())
    throw std::invalid_argument("element literal has wrong arity: " + text);
  std::vector<Scalar> vals;
  for (std::size_t p = 0; p < parts.size(); ++p)
    vals.push_back(Scalar::parse(kinds_[p], parts[p]));
  return from_values(std::move(vals));
}

// --- TableModel -------------------------------------------------------------

TableModel::TableModel(std::vector<std::string> names, std::size_t zero,
                       std::vector<std::vector<std::size_t>> add,
                       std::vector<std::pair<std::size_t, std::size_t>> order)
    : names_(std::move(names)), zero_(zero), add_(std::move(add)) {
  std::size_t n = names_.size();
  if (n == 0 || n > 64) throw std::invalid_argument("table: need 1..64 elements");
  if (zero_ >= n) throw std::invalid_argument("table: zero index out of range");
  if (add_.size() != n) throw std::invalid_argument("table: addition table has wrong size");
  for (auto& row : add_) {
    if (row.size() != n) throw std::invalid_argument("table: addition table has wrong size");
    for (auto v : row)
      if (v >= n) throw std::invalid_argument("table: addition result out of range");
  }
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : order) {
    if (a >= n || b >= n) throw std::invalid_argument("table: order index out of range");
    leq_[a * n + b] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq_[i * n + j] && leq_[j * n + i])
        throw std::invalid_argument("table: order not antisymmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (add_[zero_][i] != i || add_[i][zero_] != i)
      throw std::invalid_argument("table: zero is not neutral");
    if (!leq_idx(zero_, i)) throw std::invalid_argument("table: zero is not least");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (add_[i][j] != add_[j][i])
        throw std::invalid_argument("table: addition not commutative");
      for (std::size_t k = 0; k < n; ++k)
        if (add_[add_[i][j]][k] != add_[i][add_[j][k]])
          throw std::invalid_argument("table: addition not associative");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_idx(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (!leq_idx(add_[i][k], add_[j][k]))
            throw std::invalid_argument("table: addition not order-monotone");
}

std::string TableModel::describe() const {
  return "table(" + std::to_string(size()) + " elements)";
}

Element TableModel::at(std::size_t i) const {
  if (i >= size()) throw std::invalid_argument("table: index out of range");
  return make_code(i);
}

Element TableModel::zero() const { return make_code(zero_); }

bool TableModel::leq(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  return leq_idx(x.code(), y.code());
}

Element TableModel::add(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  return make_code(add_[x.code()][y.code()]);
}

bool TableModel::way_below(const Element& x, const Element& y) const {
  // finite model: increasing sequences stabilize, every element is compact
  return leq(x, y);
}

Element TableModel::sup_chain(const Element& a, const Element& b) const {
  require_mine(a);
  require_mine(b);
  Element cur = a;
  for (std::size_t i = 0; i <= size(); ++i) {
    Element next = add(cur, b);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

std::optional<Element> TableModel::infimum(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<std::size_t> lb;
  for (std::size_t i = 0; i < size(); ++i)
    if (leq_idx(i, x.code()) && leq_idx(i, y.code())) lb.push_back(i);
  for (auto g : lb) {
    bool greatest = true;
    for (auto z : lb)
      if (!leq_idx(z, g)) {
        greatest = false;
        break;
      }
    if (greatest) return make_code(g);
  }
  return std::nullopt;
}

std::optional<Element> TableModel::join(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<std::size_t> ub;
  for (std::size_t i = 0; i < size(); ++i)
    if (leq_idx(x.code(), i) && leq_idx(y.code(), i)) ub.push_back(i);
  for (auto l : ub) {
    bool least = true;
    for (auto z : ub)
      if (!leq_idx(l, z)) {
        least = false;
        break;
      }
    if (least) return make_code(l);
  }
  return std::nullopt;
}

std::optional<Element> TableModel::largest() const {
  for (std::size_t i = 0; i < size(); ++i) {
    bool top = true;
    for (std::size_t j = 0; j < size() && top; ++j)
      if (!leq_idx(j, i)) top = false;
    if (top) return make_code(i);
  }
  return std::nullopt;
}

std::vector<Element> TableModel::enumerate(const Cap& cap) const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < size(); ++i) {
    Element e = make_code(i);
    if (cap.bound && !leq(e, *cap.bound)) continue;
    out.push_back(e);
  }
  return out;
}

std::string TableModel::literal(const Element& x) const {
  require_mine(x);
  return names_[x.code()];
}

Element TableModel::parse_literal(const std::string& text) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (names_[i] == text) return make_code(i);
  throw std::invalid_argument("table: no element named '" + text + "'");
}

// --- TorsionModel -----------------------------------------------------------
//
// codes: kTop for the top; otherwise 4*s + cls with cls in {0,1,2,3}
// standing for {0, e, f, e+f}. degree = 2s + popcount(cls).

std::int64_t TorsionModel::deg_of(std::uint64_t code) {
  return 2 * static_cast<std::int64_t>(code >> 2) + std::popcount(static_cast<unsigned>(code & 3));
}

Element TorsionModel::zero() const { return make_code(0); }
Element TorsionModel::gen_e() const { return make_code(1); }
Element TorsionModel::gen_f() const { return make_code(2); }
Element TorsionModel::top() const { return make_code(kTop); }

Element TorsionModel::from_counts(std::int64_t m, std::int64_t n) const {
  if (m < 0 || n < 0) throw std::invalid_argument("torsion: negative generator count");
  std::uint64_t cls = static_cast<std::uint64_t>((m & 1) | ((n & 1) << 1));
  std::uint64_t s = static_cast<std::uint64_t>(m / 2 + n / 2);
  return make_code(4 * s + cls);
}

std::optional<std::int64_t> TorsionModel::degree(const Element& x) const {
  require_mine(x);
  if (x.code() == kTop) return std::nullopt;
  return deg_of(x.code());
}

bool TorsionModel::leq(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  if (y.code() == kTop) return true;
  if (x.code() == kTop) return false;
  std::int64_t d = deg_of(y.code()) - deg_of(x.code());
  unsigned diff = static_cast<unsigned>((x.code() ^ y.code()) & 3);
  return d >= std::popcount(diff);
}

Element TorsionModel::add(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  if (x.code() == kTop || y.code() == kTop) return top();
  std::uint64_t cx = x.code() & 3, cy = y.code() & 3;
  std::uint64_t s = (x.code() >> 2) + (y.code() >> 2) +
                    std::popcount(static_cast<unsigned>(cx & cy));
  return make_code(4 * s + (cx ^ cy));
}

bool TorsionModel::way_below(const Element& x, const Element& y) const {
  require_mine(x);
  // the top is the supremum of the unbounded chains and is not compact;
  // every normal form is compact
  if (x.code() == kTop) return false;
  return leq(x, y);
}

Element TorsionModel::sup_chain(const Element& a, const Element& b) const {
  require_mine(a);
  require_mine(b);
  if (b.code() == 0) return a;
  return top();
}

std::optional<Element> TorsionModel::infimum(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  if (x.code() == kTop) return y;
  if (y.code() == kTop) return x;
  std::int64_t d = std::min(deg_of(x.code()), deg_of(y.code()));
  std::vector<std::uint64_t> lb;
  for (std::int64_t s = 0; 2 * s <= d; ++s)
    for (std::uint64_t cls = 0; cls < 4; ++cls) {
      std::uint64_t code = 4 * static_cast<std::uint64_t>(s) + cls;
      if (deg_of(code) > d) continue;
      Element z = make_code(code);
      if (leq(z, x) && leq(z, y)) lb.push_back(code);
    }
  for (auto g : lb) {
    bool greatest = true;
    for (auto z : lb)
      if (!leq(make_code(z), make_code(g))) {
        greatest = false;
        break;
      }
    if (greatest) return make_code(g);
  }
  return std::nullopt;
}

std::optional<Element> TorsionModel::join(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  if (x.code() == kTop || y.code() == kTop) return top();
  std::int64_t dmax = deg_of(x.code()) + deg_of(y.code()) + 2;
  std::vector<std::uint64_t> ub;
  for (std::int64_t s = 0; 2 * s <= dmax; ++s)
    for (std::uint64_t cls = 0; cls < 4; ++cls) {
      std::uint64_t code = 4 * static_cast<std::uint64_t>(s) + cls;
      if (deg_of(code) > dmax) continue;
      Element z = make_code(code);
      if (leq(x, z) && leq(y, z)) ub.push_back(code);
    }
  // any upper bound of degree above dmax dominates all candidates here, so a
  // least element of this finite slice is a least upper bound outright
  for (auto l : ub) {
    bool least = true;
    for (auto z : ub)
      if (!leq(make_code(l), make_code(z))) {
        least = false;
        break;
      }
    if (least) return make_code(l);
  }
  return std::nullopt;
}

std::optional<Element> TorsionModel::largest() const { return top(); }

std::vector<Element> TorsionModel::enumerate(const Cap& cap) const {
  std::vector<std::uint64_t> codes;
  std::int64_t dmax = cap.ceiling;
  for (std::int64_t d = 0; d <= dmax; ++d)
    for (std::uint64_t cls = 0; cls < 4; ++cls) {
      std::int64_t rest = d - std::popcount(static_cast<unsigned>(cls));
      if (rest < 0 || rest % 2) continue;
      codes.push_back(4 * static_cast<std::uint64_t>(rest / 2) + cls);
    }
  std::vector<Element> out;
  for (auto c : codes) {
    Element e = make_code(c);
    if (cap.bound && !leq(e, *cap.bound)) continue;
    out.push_back(e);
  }
  if (!cap.bound || cap.bound->code() == kTop) out.push_back(top());
  return out;
}

std::string TorsionModel::literal(const Element& x) const {
  require_mine(x);
  if (x.code() == kTop) return "top";
  std::uint64_t s = x.code() >> 2, cls = x.code() & 3;
  std::int64_t m = 2 * static_cast<std::int64_t>(s) + (cls & 1);
  std::int64_t n = static_cast<std::int64_t>((cls >> 1) & 1);
  std::ostringstream os;
  if (m == 0 && n == 0) return "0";
  if (m > 0) os << (m > 1 ? std::to_string(m) : "") << "e";
  if (n > 0) {
    if (m > 0) os << "+";
    os << (n > 1 ? std::to_string(n) : "") << "f";
  }
  return os.str();
}

Element TorsionModel::parse_literal(const std::string& text) const {
  if (text == "top") return top();
  if (text == "0") return zero();
  std::int64_t m = 0, n = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::int64_t k = 0;
    bool got = false;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      k = k * 10 + (text[i] - '0');
      got = true;
      ++i;
    }
    if (!got) k = 1;
    if (i >= text.size()) throw std::invalid_argument("torsion literal: " + text);
    if (text[i] == 'e') m += k;
    else if (text[i] == 'f') n += k;
    else throw std::invalid_argument("torsion literal: " + text);
    ++i;
    if (i < text.size() && text[i] == '+') ++i;
  }
  return from_counts(m, n);
}

// --- QuotientModel ----------------------------------------------------------

QuotientModel::QuotientModel(std::shared_ptr<const LscModel> base, std::uint32_t up_mask)
    : base_(std::move(base)), mask_(up_mask) {
  if (!base_->poset().is_up_closed(mask_))
    throw std::invalid_argument("quotient: ideal support must be upward closed");
}

std::string QuotientModel::describe() const {
  std::ostringstream os;
  os << base_->describe() << "/{";
  bool first = true;
  for (std::size_t p = 0; p < base_->poset().size(); ++p)
    if (mask_ >> p & 1) {
      if (!first) os << ",";
      os << base_->poset().points()[p];
      first = false;
    }
  os << "}";
  return os.str();
}

Element QuotientModel::canonical(const Element& base_elem) const {
  base_->require_mine(base_elem);
  std::vector<Scalar> v = base_elem.vals();
  for (std::size_t p = 0; p < v.size(); ++p)
    if (mask_ >> p & 1) v[p] = Scalar::top_of(v[p].kind());
  return make(std::move(v));
}

Element QuotientModel::zero() const {
  std::vector<Scalar> v = base_->zero().vals();
  for (std::size_t p = 0; p < v.size(); ++p)
    if (mask_ >> p & 1) v[p] = Scalar::top_of(v[p].kind());
  return make(std::move(v));
}

bool QuotientModel::leq(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  for (std::size_t p = 0; p < x.vals().size(); ++p)
    if (!x.vals()[p].leq(y.vals()[p])) return false;
  return true;
}

Element QuotientModel::add(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < x.vals().size(); ++p) v.push_back(x.vals()[p].add(y.vals()[p]));
  return make(std::move(v));
}

bool QuotientModel::way_below(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  // compact containment lives on the surviving points only
  for (std::size_t p = 0; p < x.vals().size(); ++p) {
    if (mask_ >> p & 1) continue;
    if (!x.vals()[p].way_below(y.vals()[p])) return false;
  }
  return true;
}

Element QuotientModel::sup_chain(const Element& a, const Element& b) const {
  require_mine(a);
  require_mine(b);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < a.vals().size(); ++p)
    v.push_back(a.vals()[p].add(b.vals()[p].saturate()));
  return make(std::move(v));
}

std::optional<Element> QuotientModel::infimum(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < x.vals().size(); ++p) v.push_back(x.vals()[p].inf(y.vals()[p]));
  return make(std::move(v));
}

std::optional<Element> QuotientModel::join(const Element& x, const Element& y) const {
  require_mine(x);
  require_mine(y);
  std::vector<Scalar> v;
  for (std::size_t p = 0; p < x.vals().size(); ++p) v.push_back(x.vals()[p].join(y.vals()[p]));
  return make(std::move(v));
}

std::optional<Element> QuotientModel::largest() const {
  auto t = base_->largest();
  return canonical(*t);
}

std::vector<Element> QuotientModel::enumerate(const Cap& cap) const {
  Cap base_cap = cap;
  if (cap.bound) {
    // reinterpret the bound over the base model
    base_cap.bound = base_->from_values(cap.bound->vals());
  }
  std::vector<Element> out;
  for (const Element& b : base_->enumerate(base_cap)) {
    Element c = canonical(b);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

std::string QuotientModel::literal(const Element& x) const {
  require_mine(x);
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < x.vals().size(); ++p) {
    if (p) os << ",";
    os << x.vals()[p].str();
  }
  os << ")";
  return os.str();
}

Element QuotientModel::parse_literal(const std::string& text) const {
  Element b = base_->parse_literal(text);
  return canonical(b);
}

// --- factories --------------------------------------------------------------

CuModel make_lsc(FinitePoset poset, ScalarKind kind) {
  std::vector<ScalarKind> ks(poset.size(), kind);
  return make_lsc(std::move(poset), std::move(ks));
}

CuModel make_lsc(FinitePoset poset, std::vector<ScalarKind> kinds) {
  return CuModel(std::make_shared<LscModel>(std::move(poset), std::move(kinds)));
}

CuModel make_scalar(ScalarKind kind) {
  return make_lsc(FinitePoset({"pt"}, {}), kind);
}

CuModel make_product(const std::vector<CuModel>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
  std::vector<std::string> points;
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  std::vector<ScalarKind> kinds;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    auto lsc = dynamic_cast<const LscModel*>(&factors[f].impl());
    if (!lsc)
      throw std::invalid_argument("product: only lsc-family factors are supported");
    std::size_t off = points.size();
    for (std::size_t p = 0; p < lsc->poset().size(); ++p) {
      points.push_back("f" + std::to_string(f) + "." + lsc->poset().points()[p]);
      kinds.push_back(lsc->kinds()[p]);
    }
    for (std::size_t p = 0; p < lsc->poset().size(); ++p)
      for (std::size_t q = 0; q < lsc->poset().size(); ++q)
        if (p != q && lsc->poset().leq(p, q)) rel.push_back({off + p, off + q});
  }
  return make_lsc(FinitePoset(points, rel), kinds);
}

CuModel make_table(std::vector<std::string> names, std::size_t zero,
                   std::vector<std::vector<std::size_t>> add,
                   std::vector<std::pair<std::size_t, std::size_t>> order) {
  return CuModel(std::make_shared<TableModel>(std::move(names), zero, std::move(add),
                                              std::move(order)));
}

CuModel make_torsion() { return CuModel(std::make_shared<TorsionModel>()); }

namespace {
// All nontrivial sums collapse to the top element.
CuModel collapse_table(std::vector<std::string> names,
                       std::vector<std::pair<std::size_t, std::size_t>> order) {
  std::size_t n = names.size();
  std::size_t top = n - 1;
  std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      add[i][j] = (i == 0) ? j : (j == 0) ? i : top;
  return make_table(std::move(names), 0, std::move(add), std::move(order));
}
}  // namespace

CuModel crafted_no_o5_table() {
  // 0 < x < z < t; x + x = t jumps past z, so no w satisfies x+w <= z <= x+w
  return collapse_table({"0", "x", "z", "t"}, {{0, 1}, {1, 2}, {2, 3}});
}

CuModel crafted_diamond_table() {
  return collapse_table({"0", "p", "q", "a", "b", "t"},
                        {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

}  // namespace cucalc
