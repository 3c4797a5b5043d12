// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sweepcov/interval.hpp"

using namespace sweepcov;

TEST_CASE("empty interval is representable and distinct") {
  const Interval e = Interval::empty();
  CHECK(e.is_empty());
  CHECK(!Interval(0.0).is_empty());
  CHECK(!Interval(-1.0, 1.0).is_empty());
  CHECK((e + Interval(1.0)).is_empty());
  CHECK(hull(e, Interval(2.0, 3.0)) == Interval(2.0, 3.0));
}

TEST_CASE("basic arithmetic encloses endpoint combinations") {
  const Interval a(1.0, 2.0), b(-3.0, 0.5);
  const Interval sum = a + b;
  CHECK(sum.lo <= -2.0);
  CHECK(sum.hi >= 2.5);
  const Interval prod = a * b;
  CHECK(prod.lo <= -6.0);
  CHECK(prod.hi >= 1.0);
  const Interval neg = -a;
  CHECK(neg == Interval(-2.0, -1.0));
}

TEST_CASE("inclusion isotonicity on random samples") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> span(-10.0, 10.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int iter = 0; iter < 2000; ++iter) {
    double a0 = span(rng), a1 = span(rng);
    double b0 = span(rng), b1 = span(rng);
    const Interval a{std::min(a0, a1), std::max(a0, a1)};
    const Interval b{std::min(b0, b1), std::max(b0, b1)};
    const double x = a.lo + frac(rng) * a.width();
    const double y = b.lo + frac(rng) * b.width();
    CHECK((a + b).contains(x + y));
    CHECK((a - b).contains(x - y));
    CHECK((a * b).contains(x * y));
    CHECK(hull(a, b).contains(x));
    CHECK(hull(a, b).contains(y));
    CHECK(a.contains(x));
  }
}

TEST_CASE("trig enclosures") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> span(-7.0, 7.0);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int iter = 0; iter < 2000; ++iter) {
    double a0 = span(rng), a1 = span(rng);
    const Interval a{std::min(a0, a1), std::max(a0, a1)};
    const double x = a.lo + frac(rng) * a.width();
    CHECK(sin_enclosure(a).contains(std::sin(x)));
    CHECK(cos_enclosure(a).contains(std::cos(x)));
  }
  CHECK(sin_enclosure(Interval(0.0, 4.0)).hi == 1.0);
  CHECK(cos_enclosure(Interval(3.0, 3.5)).lo == -1.0);
}
