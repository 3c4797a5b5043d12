// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sweepcov/geom.hpp"

namespace sweepcov {

// Structure-of-arrays segment soup. All hot scans below run over this layout
// so the AVX2 variants can load four segments per iteration.
struct SegmentSoA {
  std::vector<double> x0, y0, x1, y1;

  std::size_t size() const { return x0.size(); }
  bool empty() const { return x0.empty(); }
  void push(const Segment2& s) {
    x0.push_back(s.a.x);
    y0.push_back(s.a.y);
    x1.push_back(s.b.x);
    y1.push_back(s.b.y);
  }
  Segment2 segment(std::size_t i) const {
    return {{x0[i], y0[i]}, {x1[i], y1[i]}};
  }
};

namespace kernels {

inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

struct NearestSeg {
  double dist_sq = std::numeric_limits<double>::infinity();
  std::uint32_t index = kNoIndex;
};

struct RayHit {
  double t = std::numeric_limits<double>::infinity();  // distance along ray
  double s = 0.0;                                      // parameter on the segment
  std::uint32_t index = kNoIndex;
};

// True if any segment intersects the box (separating-axis test: box axes
// plus the segment normal, exact for zero-width segments).
bool any_segment_intersects_box(const SegmentSoA& soa, const Box2& box);

// Indices (ascending) of every segment intersecting the box.
void collect_segments_intersecting_box(const SegmentSoA& soa, const Box2& box,
                                       std::vector<std::uint32_t>& out);

// Closest segment to p; ties resolved to the lowest index.
NearestSeg nearest_segment(const SegmentSoA& soa, const Point2& p);

inline double min_dist_sq(const SegmentSoA& soa, const Point2& p) {
  return nearest_segment(soa, p).dist_sq;
}

// First crossing of the ray origin + t*dir (t > 0) with the soup, using the
// half-open parameter range s in [0,1) per segment. Ties on t resolve to the
// lowest index.
RayHit ray_first_hit(const SegmentSoA& soa, const Point2& origin, const Vec2& dir);

// Name of the active backend ("avx2" or "scalar").
const std::string& active_backend();

// Force the scalar backend (tests); pass false to restore auto-detection.
void force_scalar_backend(bool on);

namespace detail {
// Scalar reference implementations (always available).
bool any_hit_scalar(const SegmentSoA&, const Box2&);
void collect_hits_scalar(const SegmentSoA&, const Box2&, std::vector<std::uint32_t>&);
NearestSeg nearest_scalar(const SegmentSoA&, const Point2&);
RayHit ray_scalar(const SegmentSoA&, const Point2&, const Vec2&);

bool avx2_supported();
#if defined(__x86_64__) || defined(_M_X64)
bool any_hit_avx2(const SegmentSoA&, const Box2&);
void collect_hits_avx2(const SegmentSoA&, const Box2&, std::vector<std::uint32_t>&);
NearestSeg nearest_avx2(const SegmentSoA&, const Point2&);
RayHit ray_avx2(const SegmentSoA&, const Point2&, const Vec2&);
#endif
}  // namespace detail

}  // namespace kernels
}  // namespace sweepcov
