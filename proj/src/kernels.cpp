// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

// Scalar reference kernels plus runtime backend selection. The AVX2
// variants in kernels_avx2.cpp implement the same arithmetic; both TUs are
// compiled with -ffp-contract=off so the two backends return bit-identical
// results (the equivalence suite asserts exact equality).

#include "sweepcov/kernels.hpp"

#include <atomic>
#include <cmath>

namespace sweepcov::kernels {

namespace detail {

namespace {

// Segment-vs-AABB separating axis test on doubled extents (no divisions).
inline bool seg_box_overlap(double x0, double y0, double x1, double y1,
                            double bxlo, double bxhi, double bylo, double byhi) {
  const double ex = x1 - x0;
  const double ey = y1 - y0;
  const double m2x = (x0 + x1) - (bxlo + bxhi);
  const double m2y = (y0 + y1) - (bylo + byhi);
  const double h2x = bxhi - bxlo;
  const double h2y = byhi - bylo;
  if (std::abs(m2x) > h2x + std::abs(ex)) return false;
  if (std::abs(m2y) > h2y + std::abs(ey)) return false;
  return std::abs(ex * m2y - ey * m2x) <= h2x * std::abs(ey) + h2y * std::abs(ex);
}

}  // namespace

bool any_hit_scalar(const SegmentSoA& soa, const Box2& box) {
  const std::size_t n = soa.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seg_box_overlap(soa.x0[i], soa.y0[i], soa.x1[i], soa.y1[i],
                        box.x.lo, box.x.hi, box.y.lo, box.y.hi))
      return true;
  }
  return false;
}

void collect_hits_scalar(const SegmentSoA& soa, const Box2& box,
                         std::vector<std::uint32_t>& out) {
  const std::size_t n = soa.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (seg_box_overlap(soa.x0[i], soa.y0[i], soa.x1[i], soa.y1[i],
                        box.x.lo, box.x.hi, box.y.lo, box.y.hi))
      out.push_back(static_cast<std::uint32_t>(i));
  }
}

NearestSeg nearest_scalar(const SegmentSoA& soa, const Point2& p) {
  NearestSeg best;
  const std::size_t n = soa.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = p.x - soa.x0[i];
    const double dy = p.y - soa.y0[i];
    const double ex = soa.x1[i] - soa.x0[i];
    const double ey = soa.y1[i] - soa.y0[i];
    const double den = ex * ex + ey * ey;
    double t = den > 0.0 ? (dx * ex + dy * ey) / den : 0.0;
    t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
    const double qx = dx - t * ex;
    const double qy = dy - t * ey;
    const double d2 = qx * qx + qy * qy;
    if (d2 < best.dist_sq) {
      best.dist_sq = d2;
      best.index = static_cast<std::uint32_t>(i);
    }
  }
  return best;
}

RayHit ray_scalar(const SegmentSoA& soa, const Point2& origin, const Vec2& dir) {
  RayHit best;
  const std::size_t n = soa.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double rx = soa.x0[i] - origin.x;
    const double ry = soa.y0[i] - origin.y;
    const double ex = soa.x1[i] - soa.x0[i];
    const double ey = soa.y1[i] - soa.y0[i];
    const double den = dir.x * ey - dir.y * ex;
    const double t = (rx * ey - ry * ex) / den;
    const double s = (rx * dir.y - ry * dir.x) / den;
    // NaN/inf from den == 0 fail these comparisons, which is intended.
    if (s >= 0.0 && s < 1.0 && t > 0.0 && t < best.t) {
      best.t = t;
      best.s = s;
      best.index = static_cast<std::uint32_t>(i);
    }
  }
  return best;
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace detail

namespace {

std::atomic<bool> g_force_scalar{false};

bool use_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  static const bool supported = detail::avx2_supported();
  return supported && !g_force_scalar.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

}  // namespace

void force_scalar_backend(bool on) {
  g_force_scalar.store(on, std::memory_order_relaxed);
}

const std::string& active_backend() {
  static const std::string avx2 = "avx2";
  static const std::string scalar = "scalar";
  return use_avx2() ? avx2 : scalar;
}

bool any_segment_intersects_box(const SegmentSoA& soa, const Box2& box) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) return detail::any_hit_avx2(soa, box);
#endif
  return detail::any_hit_scalar(soa, box);
}

void collect_segments_intersecting_box(const SegmentSoA& soa, const Box2& box,
                                       std::vector<std::uint32_t>& out) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) {
    detail::collect_hits_avx2(soa, box, out);
    return;
  }
#endif
  detail::collect_hits_scalar(soa, box, out);
}

NearestSeg nearest_segment(const SegmentSoA& soa, const Point2& p) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) return detail::nearest_avx2(soa, p);
#endif
  return detail::nearest_scalar(soa, p);
}

RayHit ray_first_hit(const SegmentSoA& soa, const Point2& origin, const Vec2& dir) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) return detail::ray_avx2(soa, origin, dir);
#endif
  return detail::ray_scalar(soa, origin, dir);
}

}  // namespace sweepcov::kernels
