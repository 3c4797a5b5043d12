// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sweepcov/arrangement.hpp"
#include "sweepcov/coverage.hpp"
#include "sweepcov/trajectory.hpp"

namespace sweepcov {

// One time node of an uncertain trajectory: box enclosures of position and
// velocity at time t. Enclosures between nodes are the hull of the
// bracketing rows, so rows must be sampled densely.
struct TubeRow {
  double t = 0.0;
  Box2 pos;
  Box2 vel;
};

// Box-valued enclosure of an uncertain trajectory.
class Tube {
 public:
  // Throws InputError on < 2 rows, non-increasing times or empty boxes.
  explicit Tube(std::vector<TubeRow> rows);

  // Degenerate-to-inflated tube around a known trajectory.
  static Tube from_trajectory(const PoseTrajectory& traj, double pos_radius,
                              double vel_radius);

  const std::vector<TubeRow>& rows() const { return rows_; }
  double t_start() const { return rows_.front().t; }
  double t_end() const { return rows_.back().t; }

  // Interpolated row (component-wise hull-preserving lerp of bounds).
  TubeRow row_at(double t) const;

  // Sub-tube over [t0, t1] with interpolated boundary rows.
  Tube time_slice(double t0, double t1) const;

  // Trajectory of box centers with heading reconstructed from the velocity
  // direction. Throws AssumptionError("heading indeterminate") when a
  // velocity box contains the origin.
  PoseTrajectory center_trajectory() const;

 private:
  std::vector<TubeRow> rows_;
};

// Enclosure of every realizable sensor contour: the nominal contour of the
// center trajectory plus a pad radius per polyline node. The penumbra is
// the union of the pad neighborhoods of the nominal segments.
struct ContourTube {
  Cycle nominal;
  std::vector<double> node_pad;     // per nominal point, >= 0
  std::vector<Box2> tangent_cone;   // direction enclosure per nominal point
  std::vector<double> node_time;    // trajectory time per node (NaN on caps)
  double max_pad = 0.0;
  double tol = kDefaultTol;

  double seg_pad(std::size_t i) const {
    const std::size_t n = nominal.size();
    return std::max(node_pad[i % n], node_pad[(i + 1) % n]) + tol;
  }
  bool penumbra_contains(const Point2& p) const;
  bool penumbra_meets_box(const Box2& b) const;
  // Nominal segments whose pad neighborhood intersects b.
  std::vector<std::uint32_t> reachable_segments(const Box2& b) const;
};

ContourTube build_contour_tube(const Tube& tube, const SensorConfig& cfg,
                               const PipelineOptions& opts = {});

// An uncertain self-intersection: a cluster of contour parameter windows
// whose pad neighborhoods overlap, with transversal velocity cones.
struct UncertainVertex {
  double tau_a0 = 0.0, tau_a1 = 0.0;  // first branch window
  double tau_b0 = 0.0, tau_b1 = 0.0;  // second branch window
  Box2 region;                        // hull of the overlap zone
  Box2 cone_a;                        // tangent enclosure, first branch
  Box2 cone_b;                        // tangent enclosure, second branch
  int update = 0;                     // sign of cross2 over the cones
};

// Throws AssumptionError("colinear uncertain crossing ...") when a cluster's
// velocity cones admit both cross-product signs.
std::vector<UncertainVertex> find_uncertain_intersections(const ContourTube& ct,
                                                          const Tube& tube,
                                                          const PipelineOptions& opts = {});

// Thick winding machinery: the labeled nominal complex plus the penumbra.
// Outside the penumbra every realizable contour has the nominal winding
// (realizations are straight-line homotopic inside the convex enclosures);
// penumbra values take the hull of the incident face labels.
class ThickField {
 public:
  static ThickField build(ContourTube ct, const std::vector<UncertainVertex>& vertices,
                          const PipelineOptions& opts = {});

  CoverageValue value_at(const Point2& p) const;
  CoverageValue box_value(const Box2& b) const;

  const ContourTube& contour_tube() const { return ct_; }
  const CellComplex& complex() const { return cx_; }
  int max_level() const { return cx_.max_label(); }

 private:
  ContourTube ct_;
  CellComplex cx_;
  std::vector<std::uint32_t> seg_edge_;  // nominal segment -> complex edge
  PipelineOptions opts_;

  std::pair<int, int> flank_labels(std::uint32_t nominal_seg) const;
};

// Thick winding set for one level, viewed through a ThickField.
struct ThickWindingSet {
  int level = 1;
  const ThickField* field = nullptr;

  bool lower_contains(const Point2& p) const { return field->value_at(p).lo >= level; }
  bool upper_contains(const Point2& p) const { return field->value_at(p).hi >= level; }
};

std::vector<ThickWindingSet> thick_winding_sets(const ThickField& field);

// [1,1] if b lies in the clear zone of level, [0,0] in the dark zone,
// [0,1] across the penumbra.
CoverageValue thick_characteristic(const ThickWindingSet& tw, const Box2& b);

CoverageValue uncertain_coverage(const ThickField& field, const Point2& p);
CoverageValue uncertain_coverage(const ThickField& field, const Box2& b);

// SIVIA paving against the thick field.
Paving classify_roi(const ThickField& field, const Box2& roi, double epsilon);

}  // namespace sweepcov
