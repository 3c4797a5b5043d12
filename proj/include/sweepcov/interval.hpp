// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace sweepcov {

namespace detail {
inline double next_down(double v) {
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double next_up(double v) {
  return std::nextafter(v, std::numeric_limits<double>::infinity());
}
}  // namespace detail

// Closed interval [lo, hi] of doubles. Arithmetic is outward rounded by
// widening each bound one ULP, so every operation returns an enclosure of
// the exact real result. The canonical empty interval is [+inf, -inf];
// is_empty() is NaN-safe.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr explicit Interval(double v) : lo(v), hi(v) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  static constexpr Interval empty() {
    return {std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};
  }
  static constexpr Interval whole() {
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }

  bool is_empty() const { return !(lo <= hi); }
  double width() const { return is_empty() ? 0.0 : hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return contains(0.0); }
  bool contains(const Interval& o) const {
    return o.is_empty() || (lo <= o.lo && o.hi <= hi);
  }
  bool intersects(const Interval& o) const {
    return !is_empty() && !o.is_empty() && lo <= o.hi && o.lo <= hi;
  }
  bool operator==(const Interval& o) const = default;
};

inline Interval widen_ulp(double lo, double hi) {
  return {detail::next_down(lo), detail::next_up(hi)};
}

inline Interval operator+(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return widen_ulp(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return widen_ulp(a.lo - b.hi, a.hi - b.lo);
}

inline Interval operator-(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  return {-a.hi, -a.lo};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return widen_ulp(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline Interval operator*(double s, const Interval& a) {
  return Interval(s) * a;
}

inline Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval hull(const Interval& a, double v) {
  if (a.is_empty()) return Interval(v);
  return {std::min(a.lo, v), std::max(a.hi, v)};
}

inline Interval intersection(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) return Interval::empty();
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline Interval inflated(const Interval& a, double r) {
  if (a.is_empty()) return a;
  return {a.lo - r, a.hi + r};
}

// Enclosures of sin/cos over an interval: hull of endpoint values, widened,
// clamped to ±1 when a critical point lies inside.
Interval sin_enclosure(const Interval& a);
Interval cos_enclosure(const Interval& a);

}  // namespace sweepcov
