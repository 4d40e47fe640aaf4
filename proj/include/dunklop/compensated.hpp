#pragma once

#include <cmath>

namespace dunklop {

// Kahan (compensated) accumulator. Error stays near 2*eps*sum|x_i|
// independent of the number of terms.
struct KahanAccumulator {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double y = v - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

namespace detail {

struct TwoSum {
  double s, e;
};

inline TwoSum two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b|
inline TwoSum quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoSum two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

// Unevaluated sum hi + lo, roughly 32 significant digits. Only the
// operations the alternating-series path needs.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  DoubleDouble() = default;
  DoubleDouble(double v) : hi(v) {}
  DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }

  DoubleDouble operator-() const { return {-hi, -lo}; }

  DoubleDouble& operator+=(const DoubleDouble& b) {
    const auto s = detail::two_sum(hi, b.hi);
    const double e = s.e + lo + b.lo;
    const auto r = detail::quick_two_sum(s.s, e);
    hi = r.s;
    lo = r.e;
    return *this;
  }

  friend DoubleDouble operator*(const DoubleDouble& a, double b) {
    const auto p = detail::two_prod(a.hi, b);
    const double e = p.e + a.lo * b;
    const auto r = detail::quick_two_sum(p.s, e);
    return {r.s, r.e};
  }

  friend DoubleDouble operator/(const DoubleDouble& a, double b) {
    const double q1 = a.hi / b;
    const auto p = detail::two_prod(q1, b);
    const double rem = ((a.hi - p.s) - p.e) + a.lo;
    const double q2 = rem / b;
    const auto s = detail::quick_two_sum(q1, q2);
    return {s.s, s.e};
  }
};

inline DoubleDouble abs(const DoubleDouble& a) { return a.hi < 0.0 ? -a : a; }

}  // namespace dunklop
