// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sweepcov/arrangement.hpp"
#include "sweepcov/contour.hpp"
#include "sweepcov/self_intersect.hpp"
#include "sweepcov/signed_regions.hpp"
#include "sweepcov/trajectory.hpp"

namespace sweepcov {

// Interval of coverage counts.
struct CoverageValue {
  int lo = 0;
  int hi = 0;
  bool singleton() const { return lo == hi; }
  bool operator==(const CoverageValue&) const = default;
};

struct PavingLeaf {
  Box2 box;
  CoverageValue value;
};

// Partition of a region of interest into labeled boxes, leaves in
// deterministic depth-first order.
struct Paving {
  Box2 roi;
  double epsilon = 0.0;
  std::vector<PavingLeaf> leaves;
};

struct PipelineOptions {
  double sampling = 0.05;
  double tol = kDefaultTol;
  // Waterfall decomposition stop fraction; <= 0 picks a fraction fine
  // enough for the trajectory's sample spacing.
  double resolution = 0.0;
  double transversality_min = 0.01;
};

// One labeled cycle of the mission decomposition.
struct LabeledCycle {
  Cycle cycle;
  CellComplex complex;
  bool backward = false;  // true for gamma_minus loops
};

// The full certain pipeline for one mission: signed decomposition, signed
// contours, one labeled cell complex per contour loop. Build once, query
// many times.
class CoverageField {
 public:
  static CoverageField build(const PoseTrajectory& traj, const SensorConfig& cfg,
                             const PipelineOptions& opts = {});

  // Coverage measure: sum of the extended windings of every signed loop.
  // Exact away from the images of unresolved decomposition cells; inside
  // them the sweep direction is unknown and only box_value brackets the
  // truth (see near_sign_boundary).
  int measure(const Point2& p) const;

  // True when the box touches the image of an unresolved waterfall cell.
  bool near_sign_boundary(const Box2& box) const;

  // Certain/uncertain coverage of a box against the built contours.
  CoverageValue box_value(const Box2& box) const;

  const std::vector<LabeledCycle>& loops() const { return loops_; }
  const std::vector<Box2>& unresolved_images() const { return unresolved_images_; }
  const SignedRegionDecomposition& decomposition() const { return decomposition_; }
  const std::vector<AssumptionReport>& reports() const { return reports_; }
  const PipelineOptions& options() const { return opts_; }
  int max_coverage_label() const;

 private:
  PipelineOptions opts_;
  SignedRegionDecomposition decomposition_;
  std::vector<LabeledCycle> loops_;
  std::vector<AssumptionReport> reports_;
  std::vector<Box2> unresolved_images_;    // plane enclosures of unresolved cells
  std::vector<Interval> unresolved_time_;  // matching time windows

  int unresolved_extra(const Box2& box) const;
};

// Single-query convenience wrappers.
int coverage_measure(const PoseTrajectory& traj, const SensorConfig& cfg, const Point2& p,
                     const PipelineOptions& opts = {});

// Labeled complex of the plain (undecomposed) sensor contour.
CellComplex contour_complex(const PoseTrajectory& traj, const SensorConfig& cfg,
                            const PipelineOptions& opts = {});

// SIVIA classification of the region of interest: boxes that meet no contour
// take the exact coverage of their interior; boxes meeting a contour are
// bisected down to epsilon and labeled with the hull of the incident face
// sums.
Paving classify_roi(const CoverageField& field, const Box2& roi, double epsilon);
Paving classify_roi(const PoseTrajectory& traj, const SensorConfig& cfg, const Box2& roi,
                    double epsilon, const PipelineOptions& opts = {});

struct ExploredArea {
  std::vector<Box2> inner;  // leaves certainly explored (lo >= 1)
  std::vector<Box2> outer;  // leaves possibly explored (hi >= 1)
  double inner_area = 0.0;
  double outer_area = 0.0;
};

ExploredArea explored_area(const Paving& paving);

}  // namespace sweepcov
