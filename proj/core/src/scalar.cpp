#include "cucalc/scalar.hpp"

#include <stdexcept>

namespace cucalc {

std::string to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::NBar: return "nbar";
    case ScalarKind::ZCu: return "zcu";
    case ScalarKind::ExtRat: return "extrat";
  }
  return "?";
}

Scalar Scalar::nat(ExtRat v) {
  if (v.is_finite() && !v.is_integer())
    throw std::invalid_argument("Scalar::nat: not an integer");
  return Scalar(ScalarKind::NBar, false, v);
}

Scalar Scalar::zcu_compact(std::int64_t n) {
  return Scalar(ScalarKind::ZCu, false, ExtRat(n));
}

Scalar Scalar::zcu_soft(ExtRat t) {
  if (t.is_zero()) throw std::invalid_argument("Scalar::zcu_soft: t must be positive");
  return Scalar(ScalarKind::ZCu, true, t);
}

Scalar Scalar::rational(ExtRat q) { return Scalar(ScalarKind::ExtRat, false, q); }

Scalar Scalar::zero_of(ScalarKind k) {
  switch (k) {
    case ScalarKind::NBar: return nat(ExtRat(0));
    case ScalarKind::ZCu: return zcu_compact(0);
    case ScalarKind::ExtRat: return rational(ExtRat(0));
  }
  throw std::logic_error("zero_of");
}

Scalar Scalar::top_of(ScalarKind k) {
  switch (k) {
    case ScalarKind::NBar: return nat(ExtRat::infinity());
    case ScalarKind::ZCu: return zcu_soft(ExtRat::infinity());
    case ScalarKind::ExtRat: return rational(ExtRat::infinity());
  }
  throw std::logic_error("top_of");
}

void Scalar::require_same_kind(const Scalar& o) const {
  if (kind_ != o.kind_) throw std::invalid_argument("scalar kind mismatch");
}

bool Scalar::leq(const Scalar& o) const {
  require_same_kind(o);
  if (kind_ != ScalarKind::ZCu) return v_ <= o.v_;
  if (soft_ == o.soft_) return v_ <= o.v_;
  if (soft_ && !o.soft_) return v_ <= o.v_;  // Soft(t) <= Compact(n) iff t <= n
  return v_ < o.v_;                          // Compact(n) <= Soft(t) iff n < t
}

Scalar Scalar::add(const Scalar& o) const {
  require_same_kind(o);
  bool soft = soft_ || o.soft_;  // in ZCu any sum touching the soft layer is soft
  ExtRat s = v_ + o.v_;
  if (kind_ == ScalarKind::ZCu && soft && s.is_zero())
    throw std::logic_error("zcu soft zero");
  return Scalar(kind_, soft, s);
}

bool Scalar::way_below(const Scalar& o) const {
  require_same_kind(o);
  switch (kind_) {
    case ScalarKind::NBar:
      return v_.is_finite() && v_ <= o.v_;
    case ScalarKind::ExtRat:
      return v_.is_zero() || v_ < o.v_;
    case ScalarKind::ZCu:
      if (!soft_) return leq(o);  // compacts are compact
      if (v_.is_infinite()) return false;
      if (!o.soft_) return v_ <= o.v_;
      return v_ < o.v_;
  }
  return false;
}

Scalar Scalar::inf(const Scalar& o) const {
  require_same_kind(o);
  if (kind_ != ScalarKind::ZCu) return leq(o) ? *this : o;
  if (leq(o)) return *this;
  if (o.leq(*this)) return o;
  // Incomparable in ZCu: Compact(n) vs Soft(t) with n < t is comparable, so
  // the remaining case is Soft(t) vs Compact(n) with t > n only when
  // comparable fails both ways: t > n and not n < t is impossible; the only
  // genuinely incomparable pairs are Compact(n), Soft(t) with t <= n < t —
  // none. Being total-ish, one of the branches above always fires.
  throw std::logic_error("zcu inf: unexpected incomparable pair");
}

Scalar Scalar::join(const Scalar& o) const {
  require_same_kind(o);
  if (leq(o)) return o;
  if (o.leq(*this)) return *this;
  throw std::logic_error("scalar join: unexpected incomparable pair");
}

Scalar Scalar::nmul(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("nmul: negative");
  if (n == 0) return zero_of(kind_);
  return Scalar(kind_, soft_, v_ * ExtRat(n));
}

Scalar Scalar::saturate() const {
  if (is_zero()) return zero_of(kind_);
  return top_of(kind_);
}

std::string Scalar::str() const {
  if (kind_ != ScalarKind::ZCu) return v_.str();
  return (soft_ ? "s" : "c") + v_.str();
}

Scalar Scalar::parse(ScalarKind k, const std::string& text) {
  if (k == ScalarKind::ZCu) {
    if (text.empty()) throw std::invalid_argument("empty zcu literal");
    if (text[0] == 'c') return zcu_compact(ExtRat::parse(text.substr(1)).num());
    if (text[0] == 's') return zcu_soft(ExtRat::parse(text.substr(1)));
    throw std::invalid_argument("zcu literal must start with 'c' or 's': " + text);
  }
  ExtRat v = ExtRat::parse(text);
  return k == ScalarKind::NBar ? nat(v) : rational(v);
}

bool Scalar::enum_before(const Scalar& o) const {
  if (v_ != o.v_) return v_ < o.v_;
  // soft layer enumerates before compact at equal magnitude
  return soft_ && !o.soft_;
}

std::vector<Scalar> scalar_grid(ScalarKind k, std::int64_t ceiling, std::int64_t denominator) {
  std::vector<Scalar> out;
  switch (k) {
    case ScalarKind::NBar:
      for (std::int64_t i = 0; i <= ceiling; ++i) out.push_back(Scalar::nat(ExtRat(i)));
      out.push_back(Scalar::top_of(k));
      break;
    case ScalarKind::ExtRat:
      for (std::int64_t i = 0; i <= ceiling * denominator; ++i)
        out.push_back(Scalar::rational(ExtRat(i, denominator)));
      out.push_back(Scalar::top_of(k));
      break;
    case ScalarKind::ZCu: {
      out.push_back(Scalar::zcu_compact(0));
      for (std::int64_t i = 1; i <= ceiling * denominator; ++i) {
        ExtRat t(i, denominator);
        out.push_back(Scalar::zcu_soft(t));
        if (t.is_integer()) out.push_back(Scalar::zcu_compact(t.num()));
      }
      out.push_back(Scalar::top_of(k));
      break;
    }
  }
  return out;
}

}  // namespace cucalc
