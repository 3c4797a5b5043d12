// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "sweepcov/interval.hpp"

namespace sweepcov {

// Geometric tolerance used by every predicate unless overridden.
inline constexpr double kDefaultTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  constexpr double norm_sq() const { return x * x + y * y; }
  double norm() const { return std::sqrt(norm_sq()); }
  // CCW perpendicular.
  constexpr Vec2 perp() const { return {-y, x}; }
  Vec2 normalized(double eps = 1e-300) const {
    const double n = norm();
    if (n <= eps) return {0.0, 0.0};
    return {x / n, y / n};
  }
  bool operator==(const Vec2& o) const = default;
};

using Point2 = Vec2;

inline constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

// z-component of the 3-D cross product of (a,0) and (b,0).
inline constexpr double cross2(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

inline double distance(const Point2& a, const Point2& b) {
  return (a - b).norm();
}

// Rotation by angle psi, cached as (cos, sin).
struct Rot2 {
  double c = 1.0;
  double s = 0.0;
  static Rot2 from_angle(double psi) { return {std::cos(psi), std::sin(psi)}; }
  constexpr Vec2 apply(const Vec2& v) const {
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
};

struct Segment2 {
  Point2 a;
  Point2 b;
  Vec2 dir() const { return b - a; }
  double length() const { return dir().norm(); }
  Point2 at(double t) const { return a + dir() * t; }
};

// Squared distance from p to segment s (clamped projection).
double dist_sq_point_segment(const Point2& p, const Segment2& s);

struct Box2;

// Squared distance from p to a box (0 inside).
double dist_sq_point_box(const Point2& p, const Box2& b);

// Exact segment-vs-box overlap (separating axes: box axes + segment normal).
bool segment_intersects_box(const Segment2& s, const Box2& b);

// Axis-aligned box as a pair of intervals. Box predicates use plain min/max
// arithmetic (no outward rounding); interval arithmetic is for enclosures.
struct Box2 {
  Interval x;
  Interval y;

  constexpr Box2() = default;
  constexpr Box2(Interval ix, Interval iy) : x(ix), y(iy) {}
  static Box2 from_corners(const Point2& a, const Point2& b) {
    return {{std::min(a.x, b.x), std::max(a.x, b.x)},
            {std::min(a.y, b.y), std::max(a.y, b.y)}};
  }
  static constexpr Box2 empty() { return {Interval::empty(), Interval::empty()}; }

  bool is_empty() const { return x.is_empty() || y.is_empty(); }
  double width_x() const { return x.width(); }
  double width_y() const { return y.width(); }
  double max_side() const { return std::max(width_x(), width_y()); }
  double area() const { return is_empty() ? 0.0 : width_x() * width_y(); }
  Point2 center() const { return {x.mid(), y.mid()}; }
  bool contains(const Point2& p) const { return x.contains(p.x) && y.contains(p.y); }
  bool contains(const Box2& o) const { return x.contains(o.x) && y.contains(o.y); }
  bool intersects(const Box2& o) const { return x.intersects(o.x) && y.intersects(o.y); }
  Box2 inflated(double r) const { return {sweepcov::inflated(x, r), sweepcov::inflated(y, r)}; }
  std::array<Point2, 4> corners() const {
    return {Point2{x.lo, y.lo}, {x.hi, y.lo}, {x.hi, y.hi}, {x.lo, y.hi}};
  }
  bool operator==(const Box2& o) const = default;
};

inline Box2 hull(const Box2& a, const Box2& b) {
  return {hull(a.x, b.x), hull(a.y, b.y)};
}

inline Box2 hull(const Box2& a, const Point2& p) {
  return {hull(a.x, p.x), hull(a.y, p.y)};
}

// Splits b along its longest side (ties split along x) at the midpoint.
// Throws std::invalid_argument("degenerate bisect") when b is empty or both
// sides have zero width.
std::pair<Box2, Box2> box_bisect(const Box2& b);

// Relation of two segments under tolerance tol.
//   proper          - transversal crossing with both parameters inside (0,1)
//   non_transversal - collinear overlap or endpoint contact within tol
//   none            - disjoint
enum class SegRelation { none, proper, non_transversal };

struct SegHit {
  SegRelation kind = SegRelation::none;
  Point2 point;
  double t1 = 0.0;  // parameter on s1
  double t2 = 0.0;  // parameter on s2
};

SegHit segment_intersect(const Segment2& s1, const Segment2& s2, double tol);

}  // namespace sweepcov
