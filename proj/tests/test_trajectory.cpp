// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "missions.hpp"
#include "sweepcov/errors.hpp"
#include "sweepcov/trajectory.hpp"

using namespace sweepcov;
using sweepcov::testing::straight_mission;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("construction validates samples") {
  CHECK_THROWS_AS(PoseTrajectory{std::vector<PoseSample>(1)}, InputError);
  std::vector<PoseSample> bad(2);
  bad[0].t = 1.0;
  bad[1].t = 1.0;
  CHECK_THROWS_AS(PoseTrajectory{bad}, InputError);
  bad[1].t = 0.5;
  CHECK_THROWS_AS(PoseTrajectory{bad}, InputError);
}

TEST_CASE("visible_segment per side") {
  CHECK(visible_segment({3, 0, 0}, {1.0, SensorSide::left}).a == Point2{3, 0});
  CHECK(visible_segment({3, 0, 0}, {1.0, SensorSide::left}).b.x == doctest::Approx(3.0));
  CHECK(visible_segment({3, 0, 0}, {1.0, SensorSide::left}).b.y == doctest::Approx(1.0));

  const Segment2 rot = visible_segment({0, 0, kPi / 2}, {2.0, SensorSide::left});
  CHECK(rot.b.x == doctest::Approx(-2.0));
  CHECK(rot.b.y == doctest::Approx(0.0).epsilon(1e-12));

  const Segment2 right = visible_segment({1, 1, 0}, {1.0, SensorSide::right});
  CHECK(right.a == Point2{1, 1});
  CHECK(right.b.x == doctest::Approx(1.0));
  CHECK(right.b.y == doctest::Approx(0.0).epsilon(1e-12));

  const Segment2 both = visible_segment({0, 0, 0}, {1.5, SensorSide::both});
  CHECK(both.a.y == doctest::Approx(-1.5));
  CHECK(both.b.y == doctest::Approx(1.5));
}

TEST_CASE("sweep_point on the straight mission") {
  const PoseTrajectory traj = straight_mission();
  const SensorConfig cfg{1.0, SensorSide::left};
  const Point2 a = sweep_point({0.5, 3.0}, traj, cfg);
  CHECK(a.x == doctest::Approx(3.0));
  CHECK(a.y == doctest::Approx(0.5));
  const Point2 b = sweep_point({0.0, 7.0}, traj, cfg);
  CHECK(b.x == doctest::Approx(7.0));
  CHECK(b.y == doctest::Approx(0.0));
  CHECK_THROWS_WITH_AS(sweep_point({1.5, 3.0}, traj, cfg), "waterfall out of bounds",
                       std::out_of_range);
  CHECK_THROWS_AS(sweep_point({0.5, 11.0}, traj, cfg), std::out_of_range);
}

TEST_CASE("sweep_point on the circle mission points inward") {
  const PoseTrajectory traj = sweepcov::testing::circle_mission();
  const SensorConfig cfg{2.0, SensorSide::left};
  const Point2 p = sweep_point({2.0, 0.0}, traj, cfg);
  CHECK(p.x == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(p.y == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("jacobian_det signs and magnitudes") {
  const PoseTrajectory straight = straight_mission();
  const SensorConfig left{1.0, SensorSide::left};
  CHECK(jacobian_det({0.3, 4.0}, straight, left) == doctest::Approx(1.0));
  CHECK(jacobian_det({0.9, 0.7}, straight, left) == doctest::Approx(1.0));

  // Stationary robot.
  std::vector<PoseSample> still(2);
  still[0].t = 0.0;
  still[1].t = 1.0;
  const PoseTrajectory stopped(still);
  CHECK(jacobian_det({0.5, 0.5}, stopped, left) == doctest::Approx(0.0));

  // CCW circle with left (inward) sensor: det = R - u.
  const PoseTrajectory circle = sweepcov::testing::circle_mission();
  const SensorConfig inward{2.0, SensorSide::left};
  const double at_u2 = jacobian_det({2.0, 1.0}, circle, inward);
  const double at_u0 = jacobian_det({0.0, 1.0}, circle, inward);
  CHECK(at_u2 > 0.0);
  CHECK(at_u2 < at_u0);
  CHECK(at_u2 == doctest::Approx(3.0).epsilon(1e-3));
  CHECK(at_u0 == doctest::Approx(5.0).epsilon(1e-3));

  // Right-mounted sensor under forward motion: negative determinant.
  const SensorConfig right{1.0, SensorSide::right};
  CHECK(jacobian_det({0.3, 4.0}, straight, right) == doctest::Approx(-1.0));
}

TEST_CASE("sweep geometry invariants") {
  const PoseTrajectory traj = sweepcov::testing::running_mission();
  const SensorConfig cfg = sweepcov::testing::running_sensor();
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> ut(traj.t_start(), traj.t_end());
  std::uniform_real_distribution<double> uu(cfg.u_min(), cfg.u_max());
  for (int i = 0; i < 300; ++i) {
    const double t = ut(rng);
    const double u = uu(rng);
    const Point2 at_u = sweep_point({u, t}, traj, cfg);
    const Point2 at_0 = sweep_point({0.0, t}, traj, cfg);
    // |f(u,t) - f(0,t)| = u and f(0,t) is the robot position.
    CHECK(distance(at_u, at_0) == doctest::Approx(std::abs(u)).epsilon(1e-9));
    CHECK(distance(at_0, traj.state_at(t).p) == doctest::Approx(0.0));
  }
}

TEST_CASE("jacobian sign is invariant under time rescaling") {
  const PoseTrajectory traj = sweepcov::testing::backward_sweep_mission();
  const SensorConfig cfg = sweepcov::testing::backward_sensor();
  std::vector<PoseSample> scaled(traj.samples().begin(), traj.samples().end());
  const double c = 2.5;
  for (PoseSample& s : scaled) {
    s.t *= c;
    s.vel.x /= c;
    s.vel.y /= c;
    s.vel.z /= c;
    s.acc.x /= c * c;
    s.acc.y /= c * c;
    s.acc.z /= c * c;
  }
  const PoseTrajectory slow(scaled);
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> ut(traj.t_start(), traj.t_end());
  std::uniform_real_distribution<double> uu(0.0, cfg.range_L);
  for (int i = 0; i < 300; ++i) {
    const double t = ut(rng);
    const double u = uu(rng);
    const double d1 = jacobian_det({u, t}, traj, cfg);
    const double d2 = jacobian_det({u, c * t}, slow, cfg);
    if (std::abs(d1) < 1e-6) continue;  // near the sign change
    CHECK((d1 > 0) == (d2 > 0));
  }
}

TEST_CASE("consistency report flags mismatched velocities") {
  std::vector<PoseSample> samples(5);
  for (int i = 0; i < 5; ++i) {
    samples[i].t = i;
    samples[i].pose.x = i;
    samples[i].vel = {1.0, 0.0, 0.0};
  }
  samples[2].vel.x = 9.0;  // inconsistent with the finite difference
  const PoseTrajectory traj(samples);
  CHECK(consistency_report(traj, 0.5).size() == 1);
  CHECK(consistency_report(traj, 20.0).empty());
}
