#ifndef CUCALC_RATIONAL_HPP
#define CUCALC_RATIONAL_HPP

#include <cstdint>
#include <string>

namespace cucalc {

/// A nonnegative rational number extended with a single point at infinity.
/// All arithmetic is exact; values are kept normalized (gcd 1, positive
/// denominator). The convention 0 * inf = 0 is used throughout, matching
/// functional evaluation.
class ExtRat {
public:
  ExtRat() : num_(0), den_(1), inf_(false) {}
  ExtRat(std::int64_t n) : num_(n), den_(1), inf_(false) { check_nonneg(); }
  ExtRat(std::int64_t n, std::int64_t d);

  static ExtRat infinity() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }
  bool is_zero() const { return !inf_ && num_ == 0; }
  bool is_integer() const { return !inf_ && den_ == 1; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Largest integer strictly below this value; 0 if the value is 0.
  /// Infinity maps to infinity. Used by the rank-realization map on
  /// integer-valued models.
  ExtRat max_int_below() const;

  /// Floor as an extended integer.
  ExtRat floor() const;

  ExtRat operator+(const ExtRat& o) const;
  ExtRat operator*(const ExtRat& o) const;
  /// Saturating subtraction: max(this - o, 0); inf - finite = inf,
  /// finite - inf = 0, inf - inf = 0.
  ExtRat monus(const ExtRat& o) const;

  bool operator==(const ExtRat& o) const {
    return inf_ == o.inf_ && (inf_ || (num_ == o.num_ && den_ == o.den_));
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }
  bool operator<(const ExtRat& o) const;
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRat& o) const { return o < *this; }
  bool operator>=(const ExtRat& o) const { return o <= *this; }

  std::string str() const;

  /// Parses "7", "5/2" or "inf". Throws std::invalid_argument on bad input.
  static ExtRat parse(const std::string& text);

private:
  void check_nonneg() const;
  void normalize();

  std::int64_t num_;
  std::int64_t den_;
  bool inf_;
};

ExtRat min(const ExtRat& a, const ExtRat& b);
ExtRat max(const ExtRat& a, const ExtRat& b);

}  // namespace cucalc

#endif
