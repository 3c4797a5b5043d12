// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "missions.hpp"
#include "sweepcov/oracle.hpp"

using namespace sweepcov;
using namespace sweepcov::testing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("winding angle sum on rectangles and multi-loops") {
  std::vector<Point2> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({i * 0.25, 0.0});
  for (int i = 0; i < 4; ++i) pts.push_back({10.0, i * 0.25});
  for (int i = 40; i > 0; --i) pts.push_back({i * 0.25, 1.0});
  for (int i = 4; i > 0; --i) pts.push_back({0.0, i * 0.25});
  const Cycle rect = Cycle::from_points(std::move(pts));
  CHECK(oracle::winding_angle_sum(rect, {5.0, 0.5}) == 1);
  CHECK(oracle::winding_angle_sum(rect, {5.0, 2.0}) == 0);
  CHECK_THROWS_WITH_AS(oracle::winding_angle_sum(rect, {5.0, 1e-12}), "point on curve",
                       std::invalid_argument);

  // Doubly wound circle: total turn 4 pi.
  std::vector<Point2> dbl;
  for (int i = 0; i < 720; ++i) {
    const double a = 2.0 * kPi * i / 360.0;
    dbl.push_back({std::cos(a), std::sin(a)});
  }
  CHECK(oracle::winding_angle_sum(Cycle::from_points(std::move(dbl)), {0.0, 0.0}) == 2);
}

TEST_CASE("winding angle sum is densification-stable") {
  const Cycle c = random_fourier_cycle(3, 400);
  const Cycle dense = random_fourier_cycle(3, 1300);
  for (const Point2 p : {Point2{0.2, 0.1}, {1.0, -1.0}, {5.0, 5.0}, {-2.0, 0.5}}) {
    int w1 = 99, w2 = 98;
    try {
      w1 = oracle::winding_angle_sum(c, p);
      w2 = oracle::winding_angle_sum(dense, p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(w1 == w2);
  }
}

TEST_CASE("kernel count on the straight mission") {
  const PoseTrajectory traj = straight_mission();
  const SensorConfig cfg{1.0, SensorSide::left};
  CHECK(oracle::kernel_count(traj, cfg, {5.0, 0.5}, 60) == 1);
  CHECK(oracle::kernel_count(traj, cfg, {5.0, -0.5}, 60) == 0);
  CHECK_THROWS_WITH_AS(oracle::kernel_count(traj, cfg, {5.0, 0.999}, 60),
                       "near boundary, count unreliable", std::invalid_argument);
  CHECK_THROWS_AS(oracle::kernel_count(traj, cfg, {5.0, 0.5}, 10), std::invalid_argument);
}

TEST_CASE("kernel count sees the revisits of the two-loop mission") {
  const PoseTrajectory traj = two_loop_mission();
  const SensorConfig cfg = two_loop_sensor();
  const oracle::KernelCountGrid grid(traj, cfg, 400);
  CHECK(grid.count({4.0, 0.0}) == 2);
  CHECK(grid.count({0.0, 4.0}) == 2);
  CHECK(grid.count({0.0, 0.0}) == 0);   // hole of the annulus
  CHECK(grid.count({8.0, 0.0}) == 0);   // outside
}

TEST_CASE("kernel count is stable in the grid resolution") {
  const PoseTrajectory traj = backward_sweep_mission();
  const SensorConfig cfg = backward_sensor();
  const oracle::KernelCountGrid g1(traj, cfg, 300);
  const oracle::KernelCountGrid g2(traj, cfg, 600);
  for (const Point2 p : {backward_probe(), Point2{3.0, 1.0}, {1.0, 0.5}, {12.0, 5.0}}) {
    int c1 = -1, c2 = -2;
    try {
      c1 = g1.count(p);
      c2 = g2.count(p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(c1 == c2);
  }
}
