// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/signed_regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sweepcov {

namespace {

// Range maxima of the Lipschitz ingredients over trajectory samples whose
// time lies in [t0, t1] (always includes the bracketing samples).
struct LipschitzBounds {
  double a_norm = 0.0;    // |a|
  double v_psidot = 0.0;  // |v||psidot|
  double psiddot = 0.0;   // |psiddot|
  double psidot = 0.0;    // |psidot|
};

LipschitzBounds window_bounds(const PoseTrajectory& traj, double t0, double t1) {
  LipschitzBounds b;
  const auto samples = traj.samples();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const bool in_window =
        (samples[i].t >= t0 && samples[i].t <= t1) ||
        (i + 1 < samples.size() && samples[i].t <= t0 && samples[i + 1].t >= t0) ||
        (i > 0 && samples[i - 1].t <= t1 && samples[i].t >= t1);
    if (!in_window) continue;
    const Vec2 a{samples[i].acc.x, samples[i].acc.y};
    const Vec2 v{samples[i].vel.x, samples[i].vel.y};
    b.a_norm = std::max(b.a_norm, a.norm());
    b.v_psidot = std::max(b.v_psidot, v.norm() * std::abs(samples[i].vel.z));
    b.psiddot = std::max(b.psiddot, std::abs(samples[i].acc.z));
    b.psidot = std::max(b.psidot, std::abs(samples[i].vel.z));
  }
  return b;
}

}  // namespace

Interval jacobian_det_enclosure(const WaterfallRect& rect, const PoseTrajectory& traj,
                                const SensorConfig& cfg) {
  Interval hull_vals = Interval::empty();
  for (int i = 0; i < 3; ++i) {
    const double t = rect.t.lo + 0.5 * i * rect.t.width();
    const TrajectoryState st = traj.state_at(t);
    for (int j = 0; j < 3; ++j) {
      const double u = rect.u.lo + 0.5 * j * rect.u.width();
      hull_vals = hull(hull_vals, jacobian_det(st, u, cfg));
    }
  }
  const LipschitzBounds lb = window_bounds(traj, rect.t.lo, rect.t.hi);
  const double u_abs = std::max(std::abs(rect.u.lo), std::abs(rect.u.hi));
  const double lip_t = lb.a_norm + lb.v_psidot + u_abs * lb.psiddot;
  const double lip_u = lb.psidot;
  // Samples are half a cell apart, so the farthest point sits a quarter cell
  // from its nearest sample; 1.5 covers interpolation overshoot.
  const double pad = 1.5 * (lip_t * rect.t.width() / 4.0 + lip_u * rect.u.width() / 4.0);
  return inflated(hull_vals, pad);
}

Box2 waterfall_cell_image(const WaterfallRect& rect, const PoseTrajectory& traj,
                          const SensorConfig& cfg) {
  Box2 box = Box2::empty();
  for (int i = 0; i < 3; ++i) {
    const double t = rect.t.lo + 0.5 * i * rect.t.width();
    const TrajectoryState st = traj.state_at(t);
    for (int j = 0; j < 3; ++j) {
      const double u = rect.u.lo + 0.5 * j * rect.u.width();
      box = hull(box, sweep_point(st, u, cfg));
    }
  }
  // Speed bound: |df/dt| <= |v| + |u||psidot|, |df/du| = 1.
  double speed = 0.0;
  for (const PoseSample& s : traj.samples()) {
    if (s.t < rect.t.lo - 1.0 || s.t > rect.t.hi + 1.0) continue;
    const double u_abs = std::max(std::abs(rect.u.lo), std::abs(rect.u.hi));
    speed = std::max(speed, Vec2{s.vel.x, s.vel.y}.norm() + u_abs * std::abs(s.vel.z));
  }
  const double pad = 1.5 * (speed * rect.t.width() / 4.0 + rect.u.width() / 4.0);
  return box.inflated(pad);
}

SignedRegionDecomposition decompose_signed_regions(const PoseTrajectory& traj,
                                                   const SensorConfig& cfg,
                                                   double resolution, double t_lo,
                                                   double t_hi) {
  if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
  if (std::isnan(t_lo)) t_lo = traj.t_start();
  if (std::isnan(t_hi)) t_hi = traj.t_end();

  SignedRegionDecomposition out;
  out.domain = {{t_lo, t_hi}, {cfg.u_min(), cfg.u_max()}};
  const double min_t = resolution * out.domain.t.width();
  const double min_u = resolution * out.domain.u.width();

  std::vector<WaterfallRect> stack{out.domain};
  while (!stack.empty()) {
    const WaterfallRect rect = stack.back();
    stack.pop_back();
    const Interval det = jacobian_det_enclosure(rect, traj, cfg);
    if (det.lo > 0.0) {
      out.s_plus.push_back(rect);
      continue;
    }
    if (det.hi < 0.0) {
      out.s_minus.push_back(rect);
      continue;
    }
    const bool t_done = rect.t.width() <= min_t;
    const bool u_done = rect.u.width() <= min_u;
    if (t_done && u_done) {
      out.unresolved.push_back(rect);
      continue;
    }
    // Bisect the longest relative side; ties split time first.
    const bool split_t = !t_done && (u_done || rect.t.width() / out.domain.t.width() >=
                                                   rect.u.width() / out.domain.u.width());
    if (split_t) {
      const double m = rect.t.mid();
      stack.push_back({{m, rect.t.hi}, rect.u});
      stack.push_back({{rect.t.lo, m}, rect.u});
    } else {
      const double m = rect.u.mid();
      stack.push_back({rect.t, {m, rect.u.hi}});
      stack.push_back({rect.t, {rect.u.lo, m}});
    }
  }
  return out;
}

}  // namespace sweepcov
