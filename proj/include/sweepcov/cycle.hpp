// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sweepcov/geom.hpp"
#include "sweepcov/kernels.hpp"

namespace sweepcov {

// Which piece of the construction generated a cycle point.
enum class CycleSource : std::uint8_t {
  path,          // robot path f(u_min, t)
  cap_end,       // beam at the final time
  far_edge,      // f(u_max, t)
  cap_start,     // beam at the initial time
  det_boundary,  // image of a det-sign boundary inside the waterfall
  synthetic,     // directly constructed cycles (tests, tube centers)
};

// Closed oriented polyline cycle. The segment i runs pts[i] -> pts[i+1]
// (wrapping); tau is strictly increasing in [0,1) (normalized arc length);
// tangents are unit vectors.
class Cycle {
 public:
  Cycle() = default;

  // Builds a cycle from an open ring of points (closing edge implied).
  // Consecutive duplicates and a trailing duplicate of the first point are
  // dropped. Tangents default to chord directions.
  static Cycle from_points(std::vector<Point2> points,
                           CycleSource tag = CycleSource::synthetic);
  static Cycle from_points(std::vector<Point2> points, std::vector<Vec2> tangents,
                           std::vector<CycleSource> tags);
  // gen carries the generating parameter per point: the trajectory time for
  // path/far-edge/det-boundary pieces, the lateral offset for beam pieces.
  static Cycle from_points(std::vector<Point2> points, std::vector<Vec2> tangents,
                           std::vector<CycleSource> tags, std::vector<double> gens);

  std::size_t size() const { return pts_.size(); }
  const std::vector<Point2>& points() const { return pts_; }
  const std::vector<double>& taus() const { return tau_; }
  const std::vector<Vec2>& tangents() const { return tan_; }
  const std::vector<CycleSource>& sources() const { return src_; }
  const std::vector<double>& gens() const { return gen_; }

  const Point2& point(std::size_t i) const { return pts_[i % pts_.size()]; }
  Segment2 segment(std::size_t i) const {
    return {pts_[i % pts_.size()], pts_[(i + 1) % pts_.size()]};
  }

  double signed_area() const;
  double length() const;

  // Position/unit tangent at a cyclic parameter value.
  Point2 point_at(double tau) const;
  Vec2 tangent_at(double tau) const;

  // Segment index containing parameter tau and the local fraction in it.
  std::pair<std::size_t, double> locate(double tau) const;

  // Parameter of the start of segment i and of a fraction f inside it.
  double tau_of(std::size_t seg_index, double frac) const;

  Cycle reversed() const;

  // Segment soup over all cycle segments (index i == segment i).
  const SegmentSoA& soa() const;

  // Throws AssumptionError on violated invariants (< 3 points, zero
  // tangents); gap > closure_tol cannot happen by construction but is
  // asserted for cycles built piecewise ("open contour").
  void validate(double closure_tol) const;

 private:
  std::vector<Point2> pts_;
  std::vector<double> tau_;
  std::vector<Vec2> tan_;
  std::vector<CycleSource> src_;
  std::vector<double> gen_;
  mutable SegmentSoA soa_;  // built lazily
};

}  // namespace sweepcov
