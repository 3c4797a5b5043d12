// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(double v) { return std::isfinite(v); }

bool finite(const Vec3& v) { return finite(v.x) && finite(v.y) && finite(v.z); }

// Cubic Hermite value/derivative/second derivative on [0,1] scaled by dt.
struct Hermite {
  double p0, p1, m0, m1;  // endpoint values and endpoint slopes (per unit t)
  double dt;

  double value(double s) const {
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * dt * m0 +
           (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * dt * m1;
  }
  double deriv(double s) const {
    const double s2 = s * s;
    return ((6 * s2 - 6 * s) * p0 + (3 * s2 - 4 * s + 1) * dt * m0 +
            (-6 * s2 + 6 * s) * p1 + (3 * s2 - 2 * s) * dt * m1) / dt;
  }
  double deriv2(double s) const {
    return ((12 * s - 6) * p0 + (6 * s - 4) * dt * m0 + (-12 * s + 6) * p1 +
            (6 * s - 2) * dt * m1) / (dt * dt);
  }
};

}  // namespace

std::string to_string(SensorSide side) {
  switch (side) {
    case SensorSide::left: return "left";
    case SensorSide::right: return "right";
    case SensorSide::both: return "both";
  }
  return "?";
}

PoseTrajectory::PoseTrajectory(std::vector<PoseSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw InputError("too short: need at least 2 samples");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const PoseSample& s = samples_[i];
    if (!finite(s.t) || !finite(s.pose.x) || !finite(s.pose.y) ||
        !finite(s.pose.psi) || !finite(s.vel) || !finite(s.acc))
      throw InputError("invalid value at sample " + std::to_string(i));
    if (i > 0 && !(s.t > samples_[i - 1].t))
      throw InputError("time order violated at sample " + std::to_string(i));
    max_speed_ = std::max(max_speed_, Vec2{s.vel.x, s.vel.y}.norm());
  }
}

TrajectoryState PoseTrajectory::state_at(double t) const {
  const double slack = 1e-9 * std::max(1.0, std::abs(t_end()));
  if (t < t_start() - slack || t > t_end() + slack)
    throw std::out_of_range("waterfall out of bounds");
  t = std::clamp(t, t_start(), t_end());

  const auto it = std::upper_bound(
      samples_.begin(), samples_.end(), t,
      [](double value, const PoseSample& s) { return value < s.t; });
  const std::size_t hi = std::clamp<std::size_t>(
      static_cast<std::size_t>(it - samples_.begin()), 1, samples_.size() - 1);
  const PoseSample& a = samples_[hi - 1];
  const PoseSample& b = samples_[hi];
  const double dt = b.t - a.t;
  const double s = (t - a.t) / dt;

  const Hermite hx{a.pose.x, b.pose.x, a.vel.x, b.vel.x, dt};
  const Hermite hy{a.pose.y, b.pose.y, a.vel.y, b.vel.y, dt};
  const Hermite hpsi{a.pose.psi, b.pose.psi, a.vel.z, b.vel.z, dt};
  const Hermite hvx{a.vel.x, b.vel.x, a.acc.x, b.acc.x, dt};
  const Hermite hvy{a.vel.y, b.vel.y, a.acc.y, b.acc.y, dt};
  const Hermite hw{a.vel.z, b.vel.z, a.acc.z, b.acc.z, dt};

  TrajectoryState st;
  st.p = {hx.value(s), hy.value(s)};
  st.psi = hpsi.value(s);
  st.v = {hvx.value(s), hvy.value(s)};
  st.psidot = hw.value(s);
  st.a = {hvx.deriv(s), hvy.deriv(s)};
  st.psiddot = hw.deriv(s);
  return st;
}

bool PoseTrajectory::is_closed(double pos_tol, double ang_tol) const {
  const Pose& a = samples_.front().pose;
  const Pose& b = samples_.back().pose;
  if (distance(a.position(), b.position()) > pos_tol) return false;
  double dpsi = std::fmod(b.psi - a.psi, kTwoPi);
  if (dpsi > std::numbers::pi) dpsi -= kTwoPi;
  if (dpsi < -std::numbers::pi) dpsi += kTwoPi;
  return std::abs(dpsi) <= ang_tol;
}

std::vector<std::string> consistency_report(const PoseTrajectory& traj, double vel_tol) {
  std::vector<std::string> warnings;
  const auto samples = traj.samples();
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const double dt = samples[i + 1].t - samples[i - 1].t;
    const double fdx = (samples[i + 1].pose.x - samples[i - 1].pose.x) / dt;
    const double fdy = (samples[i + 1].pose.y - samples[i - 1].pose.y) / dt;
    const double fdpsi = (samples[i + 1].pose.psi - samples[i - 1].pose.psi) / dt;
    const Vec3& v = samples[i].vel;
    if (std::abs(fdx - v.x) > vel_tol || std::abs(fdy - v.y) > vel_tol ||
        std::abs(fdpsi - v.z) > vel_tol) {
      warnings.push_back("velocity inconsistent with pose differences at sample " +
                         std::to_string(i));
    }
  }
  return warnings;
}

Segment2 visible_segment(const Pose& pose, const SensorConfig& cfg) {
  const Rot2 rot = Rot2::from_angle(pose.psi);
  const Vec2 n = rot.apply({0.0, 1.0});  // left normal
  const Point2 p = pose.position();
  switch (cfg.side) {
    case SensorSide::left:
      return {p, p + n * cfg.range_L};
    case SensorSide::right:
      return {p, p - n * cfg.range_L};
    case SensorSide::both:
      return {p - n * cfg.range_L, p + n * cfg.range_L};
  }
  return {p, p};
}

Point2 sweep_point(const TrajectoryState& st, double u, const SensorConfig& cfg) {
  return st.p + st.left_normal() * (cfg.lateral_sign() * u);
}

Vec2 sweep_velocity(const TrajectoryState& st, double u, const SensorConfig& cfg) {
  // d/dt [p + s*u*n] = v - s*u*psidot*heading
  return st.v - st.heading() * (cfg.lateral_sign() * u * st.psidot);
}

double jacobian_det(const TrajectoryState& st, double u, const SensorConfig& cfg) {
  return cfg.lateral_sign() * st.v.dot(st.heading()) - u * st.psidot;
}

Point2 sweep_point(const WaterfallPoint& w, const PoseTrajectory& traj,
                   const SensorConfig& cfg) {
  const double slack = 1e-9 * std::max(1.0, cfg.range_L);
  if (w.u < cfg.u_min() - slack || w.u > cfg.u_max() + slack)
    throw std::out_of_range("waterfall out of bounds");
  return sweep_point(traj.state_at(w.t), std::clamp(w.u, cfg.u_min(), cfg.u_max()), cfg);
}

double jacobian_det(const WaterfallPoint& w, const PoseTrajectory& traj,
                    const SensorConfig& cfg) {
  return jacobian_det(traj.state_at(w.t), w.u, cfg);
}

}  // namespace sweepcov
