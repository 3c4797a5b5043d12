// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sweepcov/interval.hpp"
#include "sweepcov/trajectory.hpp"

namespace sweepcov {

// Axis-aligned cell of the waterfall space, (t, u) plane.
struct WaterfallRect {
  Interval t;
  Interval u;
};

// Partition of the waterfall space by the sign of det J_f. Cells land in
// s_plus/s_minus only when the interval enclosure of the determinant is
// strictly positive/negative; cells still straddling zero at the stopping
// resolution are unresolved. The three collections tile the domain.
struct SignedRegionDecomposition {
  WaterfallRect domain;
  std::vector<WaterfallRect> s_plus;
  std::vector<WaterfallRect> s_minus;
  std::vector<WaterfallRect> unresolved;

  bool all_positive() const { return s_minus.empty() && unresolved.empty(); }
  bool all_negative() const { return s_plus.empty() && unresolved.empty(); }
};

// Conservative enclosure of det J_f over a waterfall cell: hull of a 3x3
// sample grid inflated by a Lipschitz bound estimated from the trajectory's
// velocity/acceleration samples.
Interval jacobian_det_enclosure(const WaterfallRect& rect, const PoseTrajectory& traj,
                                const SensorConfig& cfg);

// Enclosure of the image f(rect) in the plane (sampled hull plus a speed
// bound pad). Used to widen coverage values where the sweep direction could
// not be resolved.
Box2 waterfall_cell_image(const WaterfallRect& rect, const PoseTrajectory& traj,
                          const SensorConfig& cfg);

// resolution is relative: bisection of a cell stops once each side is below
// resolution times the corresponding domain extent. t_lo/t_hi restrict the
// time domain (used for the closed-trajectory inset); NaN means full span.
SignedRegionDecomposition decompose_signed_regions(
    const PoseTrajectory& traj, const SensorConfig& cfg, double resolution = 1.0 / 128.0,
    double t_lo = std::numeric_limits<double>::quiet_NaN(),
    double t_hi = std::numeric_limits<double>::quiet_NaN());

}  // namespace sweepcov
