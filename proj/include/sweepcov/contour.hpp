// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sweepcov/cycle.hpp"
#include "sweepcov/signed_regions.hpp"
#include "sweepcov/trajectory.hpp"

namespace sweepcov {

struct ContourOptions {
  double sampling = 0.05;  // max world-space spacing of consecutive points, m
  double tol = kDefaultTol;
};

// Time inset applied to closed trajectories so the coinciding end caps turn
// into a slit about 2*tol wide. Zero for open trajectories.
double contour_time_inset(const PoseTrajectory& traj, const SensorConfig& cfg, double tol);

// Sensor contour: the image of the waterfall boundary, concatenating the
// robot path, the final beam, the reversed far edge and the reversed initial
// beam. Positively oriented whenever det J_f > 0 on the whole waterfall.
Cycle build_contour(const PoseTrajectory& traj, const SensorConfig& cfg,
                    const ContourOptions& opts = {});

struct SignedContours {
  std::vector<Cycle> gamma_plus;   // images of boundary loops of S+
  std::vector<Cycle> gamma_minus;  // images of boundary loops of S-, reversed
};

// Boundary cycles of the forward/backward swept waterfall regions.
// Unresolved cells are attributed to both sides. gamma_minus loops are
// reversed after mapping so every returned cycle is positively oriented in
// the sense of the coverage formula.
SignedContours build_signed_contours(const PoseTrajectory& traj, const SensorConfig& cfg,
                                     const SignedRegionDecomposition& dec,
                                     const ContourOptions& opts = {});

namespace detail {

// Directed rectilinear boundary loops of a union of axis-aligned cells,
// interior on the left (outer loops CCW, holes CW). Exposed for tests.
std::vector<std::vector<Point2>> rectilinear_boundary(const std::vector<WaterfallRect>& cells);

}  // namespace detail

}  // namespace sweepcov
