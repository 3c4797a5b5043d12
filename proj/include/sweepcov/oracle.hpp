// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sweepcov/cycle.hpp"
#include "sweepcov/trajectory.hpp"

namespace sweepcov {
// Brute-force reference implementations, deliberately simple and O(n) /
// O(grid^2). They back the test suites and the `oracle` CLI subcommand and
// share nothing with the winding pipeline beyond the core geometry and the
// sweep-function evaluation.
namespace oracle {

// Winding number of the cycle around p by summing signed turn angles.
// Throws std::invalid_argument("point on curve") when p is within 2*tol of
// the polyline.
int winding_angle_sum(const Cycle& c, const Point2& p, double tol = kDefaultTol);

// Dense waterfall-grid image of the sweep function; reusable across queries.
class KernelCountGrid {
 public:
  KernelCountGrid(const PoseTrajectory& traj, const SensorConfig& cfg, int grid_n);

  // Number of connected components of the near-preimage of p. Throws
  // std::invalid_argument("near boundary, count unreliable") when p is
  // closer than the blob radius to the image of the waterfall boundary.
  int count(const Point2& p) const;

  // Blob radius: twice the largest image step between grid neighbors.
  double radius() const { return radius_; }

 private:
  int nu_ = 0;
  int nt_ = 0;
  std::vector<Point2> image_;  // (nu+1) x (nt+1), u-major rows
  double radius_ = 0.0;

  const Point2& at(int iu, int it) const { return image_[iu * (nt_ + 1) + it]; }
};

// One-shot form of the grid oracle (pre: grid_n >= 50).
int kernel_count(const PoseTrajectory& traj, const SensorConfig& cfg, const Point2& p,
                 int grid_n);

}  // namespace oracle
}  // namespace sweepcov
