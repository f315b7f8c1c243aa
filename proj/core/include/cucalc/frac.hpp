#ifndef CUCALC_FRAC_HPP
#define CUCALC_FRAC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cucalc {

/// Signed exact rational for the small linear-algebra kernels (state
/// polytopes, affine independence). Finite only.
struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;

  Frac() = default;
  Frac(std::int64_t num) : n(num), d(1) {}
  Frac(std::int64_t num, std::int64_t den) : n(num), d(den) {
    if (den == 0) throw std::invalid_argument("Frac: zero denominator");
    norm();
  }

  void norm() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
  Frac operator-(const Frac& o) const { return Frac(n * o.d - o.n * d, d * o.d); }
  Frac operator*(const Frac& o) const { return Frac(n * o.n, d * o.d); }
  Frac operator/(const Frac& o) const {
    if (o.n == 0) throw std::invalid_argument("Frac: division by zero");
    return Frac(n * o.d, d * o.n);
  }
  Frac operator-() const { return Frac(-n, d); }

  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
  bool operator!=(const Frac& o) const { return !(*this == o); }
  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  bool operator<=(const Frac& o) const { return n * o.d <= o.n * d; }
  bool operator>(const Frac& o) const { return o < *this; }
  bool operator>=(const Frac& o) const { return o <= *this; }

  bool is_zero() const { return n == 0; }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

}  // namespace cucalc

#endif
