// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sweepcov/geom.hpp"

using namespace sweepcov;

TEST_CASE("cross2 basics and antisymmetry") {
  CHECK(cross2({1, 0}, {0, 1}) == 1.0);
  CHECK(cross2({0, 1}, {1, 0}) == -1.0);
  CHECK(cross2({2, 1}, {4, 2}) == 0.0);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    CHECK(cross2(a, b) == -cross2(b, a));
  }
}

TEST_CASE("box_bisect splits the longest side, ties on x") {
  const auto [a, b] = box_bisect({{0, 4}, {0, 2}});
  CHECK(a == Box2{{0, 2}, {0, 2}});
  CHECK(b == Box2{{2, 4}, {0, 2}});

  const auto [c, d] = box_bisect({{0, 2}, {0, 2}});
  CHECK(c == Box2{{0, 1}, {0, 2}});
  CHECK(d == Box2{{1, 2}, {0, 2}});

  // Zero-width x but positive y still splits (along y).
  const auto [e, f] = box_bisect({{1, 1}, {0, 1}});
  CHECK(e == Box2{{1, 1}, {0, 0.5}});
  CHECK(f == Box2{{1, 1}, {0.5, 1}});

  CHECK_THROWS_WITH_AS(box_bisect({{1, 1}, {2, 2}}), "degenerate bisect",
                       std::invalid_argument);
  CHECK_THROWS_AS(box_bisect(Box2::empty()), std::invalid_argument);
}

TEST_CASE("box_bisect children partition the parent") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    double x0 = u(rng), x1 = u(rng), y0 = u(rng), y1 = u(rng);
    const Box2 box{{std::min(x0, x1), std::max(x0, x1)},
                   {std::min(y0, y1), std::max(y0, y1)}};
    if (box.max_side() <= 0.0) continue;
    const auto [a, b] = box_bisect(box);
    CHECK(a.area() + b.area() == doctest::Approx(box.area()));
    CHECK(hull(a, b) == box);
    // Interiors disjoint: they share only the split line.
    CHECK((a.x.hi == b.x.lo || a.y.hi == b.y.lo));
  }
}

TEST_CASE("segment_intersect outcomes") {
  const double tol = 1e-9;
  SUBCASE("perpendicular cross") {
    const SegHit hit =
        segment_intersect({{0, 0}, {2, 0}}, {{1, -1}, {1, 1}}, tol);
    REQUIRE(hit.kind == SegRelation::proper);
    CHECK(hit.point.x == doctest::Approx(1.0));
    CHECK(hit.point.y == doctest::Approx(0.0));
    CHECK(hit.t1 == doctest::Approx(0.5));
    CHECK(hit.t2 == doctest::Approx(0.5));
  }
  SUBCASE("disjoint collinear") {
    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}, tol).kind ==
          SegRelation::none);
  }
  SUBCASE("diagonal cross solved by hand") {
    const SegHit hit = segment_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, tol);
    REQUIRE(hit.kind == SegRelation::proper);
    CHECK(hit.point.x == doctest::Approx(1.0));
    CHECK(hit.point.y == doctest::Approx(1.0));
    CHECK(hit.t1 == doctest::Approx(0.5));
    CHECK(hit.t2 == doctest::Approx(0.5));
  }
  SUBCASE("endpoint touch is non-transversal") {
    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{1, 0}, {1, 1}}, tol).kind ==
          SegRelation::non_transversal);
  }
  SUBCASE("collinear overlap is non-transversal") {
    CHECK(segment_intersect({{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}, tol).kind ==
          SegRelation::non_transversal);
  }
  SUBCASE("parallel segments separated by more than tol") {
    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{0, 5e-9}, {1, 5e-9}}, tol).kind ==
          SegRelation::none);
    CHECK(segment_intersect({{0, 0}, {1, 0}}, {{0, 5e-10}, {1, 5e-10}}, tol).kind ==
          SegRelation::non_transversal);
  }
}

TEST_CASE("segment box overlap agrees with clipping on random data") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  // Liang-Barsky style reference clip.
  const auto clip_ref = [](const Segment2& s, const Box2& b) {
    double t0 = 0.0, t1 = 1.0;
    const double d[2] = {s.b.x - s.a.x, s.b.y - s.a.y};
    const double lo[2] = {b.x.lo, b.y.lo}, hi[2] = {b.x.hi, b.y.hi};
    const double p0[2] = {s.a.x, s.a.y};
    for (int axis = 0; axis < 2; ++axis) {
      if (d[axis] == 0.0) {
        if (p0[axis] < lo[axis] || p0[axis] > hi[axis]) return false;
        continue;
      }
      double ta = (lo[axis] - p0[axis]) / d[axis];
      double tb = (hi[axis] - p0[axis]) / d[axis];
      if (ta > tb) std::swap(ta, tb);
      t0 = std::max(t0, ta);
      t1 = std::min(t1, tb);
    }
    return t0 <= t1;
  };
  for (int i = 0; i < 20000; ++i) {
    const Segment2 s{{u(rng), u(rng)}, {u(rng), u(rng)}};
    double x0 = u(rng), x1 = u(rng), y0 = u(rng), y1 = u(rng);
    const Box2 b{{std::min(x0, x1), std::max(x0, x1)},
                 {std::min(y0, y1), std::max(y0, y1)}};
    CHECK(segment_intersects_box(s, b) == clip_ref(s, b));
  }
}
