// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace sweepcov {

double dist_sq_point_segment(const Point2& p, const Segment2& s) {
  const Vec2 d = s.dir();
  const double den = d.norm_sq();
  double t = 0.0;
  if (den > 0.0) t = std::clamp((p - s.a).dot(d) / den, 0.0, 1.0);
  return (p - s.at(t)).norm_sq();
}

double dist_sq_point_box(const Point2& p, const Box2& b) {
  const double dx = std::max({b.x.lo - p.x, 0.0, p.x - b.x.hi});
  const double dy = std::max({b.y.lo - p.y, 0.0, p.y - b.y.hi});
  return dx * dx + dy * dy;
}

bool segment_intersects_box(const Segment2& s, const Box2& b) {
  const double ex = s.b.x - s.a.x;
  const double ey = s.b.y - s.a.y;
  const double m2x = (s.a.x + s.b.x) - (b.x.lo + b.x.hi);
  const double m2y = (s.a.y + s.b.y) - (b.y.lo + b.y.hi);
  const double h2x = b.x.hi - b.x.lo;
  const double h2y = b.y.hi - b.y.lo;
  if (std::abs(m2x) > h2x + std::abs(ex)) return false;
  if (std::abs(m2y) > h2y + std::abs(ey)) return false;
  return std::abs(ex * m2y - ey * m2x) <= h2x * std::abs(ey) + h2y * std::abs(ex);
}

std::pair<Box2, Box2> box_bisect(const Box2& b) {
  if (b.is_empty() || b.max_side() <= 0.0)
    throw std::invalid_argument("degenerate bisect");
  if (b.width_x() >= b.width_y()) {
    const double m = b.x.mid();
    return {Box2{{b.x.lo, m}, b.y}, Box2{{m, b.x.hi}, b.y}};
  }
  const double m = b.y.mid();
  return {Box2{b.x, {b.y.lo, m}}, Box2{b.x, {m, b.y.hi}}};
}

namespace {

// Closest approach of two segments; used to classify near-contact as
// non-transversal.
double dist_sq_segments(const Segment2& s1, const Segment2& s2) {
  double d = dist_sq_point_segment(s1.a, s2);
  d = std::min(d, dist_sq_point_segment(s1.b, s2));
  d = std::min(d, dist_sq_point_segment(s2.a, s1));
  d = std::min(d, dist_sq_point_segment(s2.b, s1));
  return d;
}

}  // namespace

SegHit segment_intersect(const Segment2& s1, const Segment2& s2, double tol) {
  const Vec2 d1 = s1.dir();
  const Vec2 d2 = s2.dir();
  const double l1 = d1.norm();
  const double l2 = d2.norm();
  SegHit hit;

  // Degenerate (point-like) segments never cross properly.
  if (l1 <= tol || l2 <= tol) {
    if (dist_sq_segments(s1, s2) <= tol * tol) hit.kind = SegRelation::non_transversal;
    return hit;
  }

  const Vec2 r = s2.a - s1.a;
  const double den = cross2(d1, d2);

  // Parallel or collinear: contact within tol is non-transversal.
  if (std::abs(den) <= tol * l1 * l2) {
    if (dist_sq_segments(s1, s2) <= tol * tol) hit.kind = SegRelation::non_transversal;
    return hit;
  }

  const double t1 = cross2(r, d2) / den;
  const double t2 = cross2(r, d1) / den;
  const double e1 = tol / l1;  // endpoint tolerance in parameter units
  const double e2 = tol / l2;

  if (t1 > e1 && t1 < 1.0 - e1 && t2 > e2 && t2 < 1.0 - e2) {
    hit.kind = SegRelation::proper;
    hit.point = s1.at(t1);
    hit.t1 = t1;
    hit.t2 = t2;
    return hit;
  }
  if (t1 >= -e1 && t1 <= 1.0 + e1 && t2 >= -e2 && t2 <= 1.0 + e2) {
    hit.kind = SegRelation::non_transversal;
    hit.point = s1.at(std::clamp(t1, 0.0, 1.0));
    hit.t1 = std::clamp(t1, 0.0, 1.0);
    hit.t2 = std::clamp(t2, 0.0, 1.0);
    return hit;
  }
  return hit;
}

}  // namespace sweepcov
