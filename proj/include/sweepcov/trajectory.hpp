// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "sweepcov/geom.hpp"

namespace sweepcov {

struct Pose {
  double x = 0.0;    // m
  double y = 0.0;    // m
  double psi = 0.0;  // rad, unwrapped (not reduced mod 2pi)
  Point2 position() const { return {x, y}; }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;  // heading-rate component for vel/acc triples
};

struct PoseSample {
  double t = 0.0;
  Pose pose;
  Vec3 vel;  // (vx, vy, psidot)
  Vec3 acc;  // (ax, ay, psiddot)
};

enum class SensorSide { left, right, both };

std::string to_string(SensorSide side);

// Line-sweep sensor: a segment of length range_L attached to the given side
// of the robot. side == both models two back-to-back sensors as one beam
// spanning [-L, L] laterally.
struct SensorConfig {
  double range_L = 1.0;  // m, > 0
  SensorSide side = SensorSide::left;

  // Lateral parameter range of the waterfall space. u is measured toward
  // the sensor side for one-sided sensors, toward the robot's left for
  // side == both.
  double u_min() const { return side == SensorSide::both ? -range_L : 0.0; }
  double u_max() const { return range_L; }
  // Sign mapping u to the robot's left normal: +1 left/both, -1 right.
  double lateral_sign() const { return side == SensorSide::right ? -1.0 : 1.0; }
};

struct WaterfallPoint {
  double u = 0.0;  // lateral parameter in [u_min, u_max]
  double t = 0.0;  // time in [t_start, t_end]
};

// Interpolated trajectory state at one instant.
struct TrajectoryState {
  Point2 p;
  double psi = 0.0;
  Vec2 v;
  double psidot = 0.0;
  Vec2 a;
  double psiddot = 0.0;

  Vec2 heading() const { return {std::cos(psi), std::sin(psi)}; }
  // Unit normal pointing to the robot's left.
  Vec2 left_normal() const { return {-std::sin(psi), std::cos(psi)}; }
};

// Time-sampled robot states over [t_start, t_end]. Positions and headings
// interpolate with cubic Hermite segments driven by the stored velocities;
// velocities interpolate with the stored accelerations, accelerations
// linearly. Immutable after construction.
class PoseTrajectory {
 public:
  // Validates: >= 2 samples, strictly increasing finite times, finite
  // states. Throws InputError otherwise.
  explicit PoseTrajectory(std::vector<PoseSample> samples);

  double t_start() const { return samples_.front().t; }
  double t_end() const { return samples_.back().t; }
  double duration() const { return t_end() - t_start(); }
  std::span<const PoseSample> samples() const { return samples_; }

  // t is clamped to [t_start, t_end] within tol; outside that it throws
  // std::out_of_range.
  TrajectoryState state_at(double t) const;

  // Start/end poses coincide (position within tol, heading within tol/L
  // equivalent when reduced mod 2pi).
  bool is_closed(double pos_tol, double ang_tol) const;

  double max_speed() const { return max_speed_; }

 private:
  std::vector<PoseSample> samples_;
  double max_speed_ = 0.0;
};

// Warnings for stored velocities that disagree with finite differences of
// the poses by more than vel_tol (per axis, m/s or rad/s).
std::vector<std::string> consistency_report(const PoseTrajectory& traj, double vel_tol);

// Sensor beam f({u range}, t) for one pose: from the robot position to the
// far end on the configured side (for side == both, from the right end to
// the left end).
Segment2 visible_segment(const Pose& pose, const SensorConfig& cfg);

// Sweep function f(u, t). Throws std::out_of_range("waterfall out of
// bounds") when (u, t) leaves the waterfall space.
Point2 sweep_point(const WaterfallPoint& w, const PoseTrajectory& traj,
                   const SensorConfig& cfg);

// det of the sweep Jacobian with columns (df/dt | df/du), the lateral axis
// oriented toward the sensor side: s*(v . heading) - u*psidot.
double jacobian_det(const WaterfallPoint& w, const PoseTrajectory& traj,
                    const SensorConfig& cfg);

double jacobian_det(const TrajectoryState& st, double u, const SensorConfig& cfg);

// f(u, t) evaluated from an interpolated state.
Point2 sweep_point(const TrajectoryState& st, double u, const SensorConfig& cfg);

// d/dt f(u, t).
Vec2 sweep_velocity(const TrajectoryState& st, double u, const SensorConfig& cfg);

}  // namespace sweepcov
