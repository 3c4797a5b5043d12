// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sweepcov::oracle {

int winding_angle_sum(const Cycle& c, const Point2& p, double tol) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_sq_point_segment(p, c.segment(i)) <= 4.0 * tol * tol)
      throw std::invalid_argument("point on curve");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = c.point(i) - p;
    const Vec2 b = c.point(i + 1) - p;
    total += std::atan2(cross2(a, b), a.dot(b));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

KernelCountGrid::KernelCountGrid(const PoseTrajectory& traj, const SensorConfig& cfg,
                                 int grid_n) {
  if (grid_n < 50) throw std::invalid_argument("grid_n must be at least 50");
  nu_ = grid_n;
  nt_ = grid_n;
  image_.resize(static_cast<std::size_t>(nu_ + 1) * (nt_ + 1));
  const double u0 = cfg.u_min(), u1 = cfg.u_max();
  const double t0 = traj.t_start(), t1 = traj.t_end();
  for (int it = 0; it <= nt_; ++it) {
    const double t = t0 + (t1 - t0) * it / nt_;
    const TrajectoryState st = traj.state_at(t);
    for (int iu = 0; iu <= nu_; ++iu) {
      const double u = u0 + (u1 - u0) * iu / nu_;
      image_[static_cast<std::size_t>(iu) * (nt_ + 1) + it] = sweep_point(st, u, cfg);
    }
  }
  double max_step = 0.0;
  for (int iu = 0; iu <= nu_; ++iu) {
    for (int it = 0; it <= nt_; ++it) {
      if (iu < nu_) max_step = std::max(max_step, distance(at(iu, it), at(iu + 1, it)));
      if (it < nt_) max_step = std::max(max_step, distance(at(iu, it), at(iu, it + 1)));
    }
  }
  radius_ = 2.0 * max_step;
}

int KernelCountGrid::count(const Point2& p) const {
  const double r2 = radius_ * radius_;

  // Reject queries near the image of the waterfall boundary.
  for (int iu = 0; iu <= nu_; ++iu) {
    if ((at(iu, 0) - p).norm_sq() < r2 || (at(iu, nt_) - p).norm_sq() < r2)
      throw std::invalid_argument("near boundary, count unreliable");
  }
  for (int it = 0; it <= nt_; ++it) {
    if ((at(0, it) - p).norm_sq() < r2 || (at(nu_, it) - p).norm_sq() < r2)
      throw std::invalid_argument("near boundary, count unreliable");
  }

  std::vector<char> mark(image_.size(), 0);
  for (std::size_t i = 0; i < image_.size(); ++i)
    mark[i] = (image_[i] - p).norm_sq() < r2 ? 1 : 0;

  // Flood fill with 8-connectivity over marked nodes.
  int components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < mark.size(); ++seed) {
    if (mark[seed] != 1) continue;
    ++components;
    stack.push_back(seed);
    mark[seed] = 2;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      const int iu = static_cast<int>(cur / (nt_ + 1));
      const int it = static_cast<int>(cur % (nt_ + 1));
      for (int du = -1; du <= 1; ++du) {
        for (int dt = -1; dt <= 1; ++dt) {
          const int ju = iu + du, jt = it + dt;
          if (ju < 0 || ju > nu_ || jt < 0 || jt > nt_) continue;
          const std::size_t j = static_cast<std::size_t>(ju) * (nt_ + 1) + jt;
          if (mark[j] == 1) {
            mark[j] = 2;
            stack.push_back(j);
          }
        }
      }
    }
  }
  return components;
}

int kernel_count(const PoseTrajectory& traj, const SensorConfig& cfg, const Point2& p,
                 int grid_n) {
  return KernelCountGrid(traj, cfg, grid_n).count(p);
}

}  // namespace sweepcov::oracle
