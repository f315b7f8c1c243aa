#include "cucalc/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace cucalc {

ExtRat::ExtRat(std::int64_t n, std::int64_t d) : num_(n), den_(d), inf_(false) {
  if (d == 0) throw std::invalid_argument("ExtRat: zero denominator");
  if (d < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  check_nonneg();
  normalize();
}

void ExtRat::check_nonneg() const {
  if (!inf_ && num_ < 0) throw std::invalid_argument("ExtRat: negative value");
}

void ExtRat::normalize() {
  std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtRat ExtRat::max_int_below() const {
  if (inf_) return infinity();
  if (num_ == 0) return ExtRat(0);
  std::int64_t q = num_ / den_;
  if (num_ % den_ == 0) q -= 1;  // strictly below
  if (q < 0) q = 0;
  return ExtRat(q);
}

ExtRat ExtRat::floor() const {
  if (inf_) return infinity();
  return ExtRat(num_ / den_);
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (inf_ || o.inf_) return infinity();
  return ExtRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ExtRat ExtRat::operator*(const ExtRat& o) const {
  // 0 * inf = 0
  if (is_zero() || o.is_zero()) return ExtRat(0);
  if (inf_ || o.inf_) return infinity();
  return ExtRat(num_ * o.num_, den_ * o.den_);
}

ExtRat ExtRat::monus(const ExtRat& o) const {
  if (o.inf_) return ExtRat(0);
  if (inf_) return infinity();
  std::int64_t n = num_ * o.den_ - o.num_ * den_;
  if (n <= 0) return ExtRat(0);
  return ExtRat(n, den_ * o.den_);
}

bool ExtRat::operator<(const ExtRat& o) const {
  if (inf_) return false;
  if (o.inf_) return true;
  return num_ * o.den_ < o.num_ * den_;
}

std::string ExtRat::str() const {
  if (inf_) return "inf";
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExtRat ExtRat::parse(const std::string& text) {
  if (text == "inf" || text == "oo") return infinity();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExtRat(std::stoll(text));
    return ExtRat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("ExtRat: cannot parse '" + text + "'");
  }
}

ExtRat min(const ExtRat& a, const ExtRat& b) { return a <= b ? a : b; }
ExtRat max(const ExtRat& a, const ExtRat& b) { return a <= b ? b : a; }

}  // namespace cucalc
