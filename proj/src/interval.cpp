// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/interval.hpp"

#include <numbers>

namespace sweepcov {

namespace {

constexpr double kPi = std::numbers::pi;

// True if some x = offset + k*2pi lies in [a.lo, a.hi].
bool contains_mod_2pi(const Interval& a, double offset) {
  const double k = std::ceil((a.lo - offset) / (2.0 * kPi));
  return offset + k * 2.0 * kPi <= a.hi;
}

}  // namespace

Interval sin_enclosure(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  if (a.width() >= 2.0 * kPi) return {-1.0, 1.0};
  const double slo = std::sin(a.lo), shi = std::sin(a.hi);
  Interval r = widen_ulp(std::min(slo, shi), std::max(slo, shi));
  if (contains_mod_2pi(a, kPi / 2.0)) r.hi = 1.0;
  if (contains_mod_2pi(a, -kPi / 2.0)) r.lo = -1.0;
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

Interval cos_enclosure(const Interval& a) {
  if (a.is_empty()) return Interval::empty();
  return sin_enclosure(a + Interval(kPi / 2.0));
}

}  // namespace sweepcov
