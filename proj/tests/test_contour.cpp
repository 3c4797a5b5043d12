// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "missions.hpp"
#include "sweepcov/contour.hpp"
#include "sweepcov/oracle.hpp"

using namespace sweepcov;
using namespace sweepcov::testing;

TEST_CASE("straight mission contour is the CCW rectangle") {
  const PoseTrajectory traj = straight_mission();
  const Cycle c = build_contour(traj, {1.0, SensorSide::left});
  CHECK(c.signed_area() == doctest::Approx(10.0).epsilon(1e-6));
  Box2 bb = Box2::empty();
  for (const Point2& p : c.points()) bb = hull(bb, p);
  CHECK(bb.x.lo == doctest::Approx(0.0));
  CHECK(bb.x.hi == doctest::Approx(10.0));
  CHECK(bb.y.lo == doctest::Approx(0.0));
  CHECK(bb.y.hi == doctest::Approx(1.0));
  // Densification: consecutive points at most `sampling` apart.
  for (std::size_t i = 0; i < c.size(); ++i)
    CHECK(c.segment(i).length() <= 0.05 + 1e-12);
}

TEST_CASE("closed circle mission produces the slit annulus contour") {
  const PoseTrajectory traj = circle_mission();
  const SensorConfig cfg{2.0, SensorSide::left};
  const Cycle c = build_contour(traj, cfg);
  // Annulus between radii 3 and 5; the slit keeps it one cycle.
  CHECK(c.signed_area() == doctest::Approx(16.0 * std::numbers::pi).epsilon(1e-3));
  double rmin = 1e9, rmax = 0.0;
  for (const Point2& p : c.points()) {
    rmin = std::min(rmin, p.norm());
    rmax = std::max(rmax, p.norm());
  }
  CHECK(rmin == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(rmax == doctest::Approx(5.0).epsilon(1e-4));
  // Winding: 1 inside the annulus, 0 in the hole and outside.
  CHECK(oracle::winding_angle_sum(c, {0.0, 4.0}) == 1);
  CHECK(oracle::winding_angle_sum(c, {0.0, 0.0}) == 0);
  CHECK(oracle::winding_angle_sum(c, {6.5, 0.0}) == 0);
}

TEST_CASE("source tags partition the contour") {
  const PoseTrajectory traj = straight_mission();
  const Cycle c = build_contour(traj, {1.0, SensorSide::left});
  bool saw_path = false, saw_far = false, saw_cap0 = false, saw_cap1 = false;
  for (const CycleSource s : c.sources()) {
    saw_path |= s == CycleSource::path;
    saw_far |= s == CycleSource::far_edge;
    saw_cap0 |= s == CycleSource::cap_start;
    saw_cap1 |= s == CycleSource::cap_end;
  }
  CHECK(saw_path);
  CHECK(saw_far);
  CHECK(saw_cap0);
  CHECK(saw_cap1);
}

TEST_CASE("rectilinear boundary extraction") {
  SUBCASE("single cell") {
    const auto loops = detail::rectilinear_boundary({{{0, 2}, {0, 1}}});
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].size() == 4);
  }
  SUBCASE("two abutting cells merge") {
    const auto loops =
        detail::rectilinear_boundary({{{0, 1}, {0, 1}}, {{1, 2}, {0, 1}}});
    REQUIRE(loops.size() == 1);
    double area = 0.0;
    const auto& lp = loops[0];
    for (std::size_t i = 0; i < lp.size(); ++i)
      area += cross2(lp[i], lp[(i + 1) % lp.size()]);
    CHECK(area / 2.0 == doctest::Approx(2.0));  // CCW
  }
  SUBCASE("hole is a clockwise loop") {
    // Ring of 8 unit cells around a hole at (1..2)x(1..2).
    std::vector<WaterfallRect> cells;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == 1 && j == 1) continue;
        cells.push_back({{static_cast<double>(i), static_cast<double>(i + 1)},
                         {static_cast<double>(j), static_cast<double>(j + 1)}});
      }
    }
    const auto loops = detail::rectilinear_boundary(cells);
    REQUIRE(loops.size() == 2);
    double a0 = 0.0, a1 = 0.0;
    for (std::size_t i = 0; i < loops[0].size(); ++i)
      a0 += cross2(loops[0][i], loops[0][(i + 1) % loops[0].size()]);
    for (std::size_t i = 0; i < loops[1].size(); ++i)
      a1 += cross2(loops[1][i], loops[1][(i + 1) % loops[1].size()]);
    CHECK(std::max(a0, a1) / 2.0 == doctest::Approx(9.0));   // outer CCW
    CHECK(std::min(a0, a1) / 2.0 == doctest::Approx(-1.0));  // hole CW
  }
}

TEST_CASE("signed contours of an all-forward mission reduce to the plain contour") {
  const PoseTrajectory traj = straight_mission();
  const SensorConfig cfg{1.0, SensorSide::left};
  const SignedRegionDecomposition dec = decompose_signed_regions(traj, cfg);
  const SignedContours sc = build_signed_contours(traj, cfg, dec);
  CHECK(sc.gamma_minus.empty());
  REQUIRE(sc.gamma_plus.size() == 1);
  CHECK(sc.gamma_plus[0].signed_area() == doctest::Approx(10.0).epsilon(1e-6));
}

TEST_CASE("right-sided mission yields one positively oriented gamma_minus") {
  const PoseTrajectory traj = straight_mission();
  const SensorConfig cfg{1.0, SensorSide::right};
  const SignedRegionDecomposition dec = decompose_signed_regions(traj, cfg);
  const SignedContours sc = build_signed_contours(traj, cfg, dec);
  CHECK(sc.gamma_plus.empty());
  REQUIRE(sc.gamma_minus.size() == 1);
  // Band below the path, reversed to positive orientation.
  CHECK(sc.gamma_minus[0].signed_area() == doctest::Approx(10.0).epsilon(1e-6));
  CHECK(oracle::winding_angle_sum(sc.gamma_minus[0], {5.0, -0.5}) == 1);
}

TEST_CASE("backward sweep mission yields both families") {
  const PoseTrajectory traj = backward_sweep_mission();
  const SensorConfig cfg = backward_sensor();
  const SignedRegionDecomposition dec = decompose_signed_regions(traj, cfg, 1.0 / 256.0);
  const SignedContours sc = build_signed_contours(traj, cfg, dec);
  CHECK(!sc.gamma_plus.empty());
  CHECK(!sc.gamma_minus.empty());
  // gamma_minus loops are positively oriented after reversal.
  for (const Cycle& c : sc.gamma_minus) CHECK(c.signed_area() > 0.0);
  // The backward-swept probe point lies inside exactly one gamma_minus loop.
  int minus_wind = 0;
  for (const Cycle& c : sc.gamma_minus)
    minus_wind += oracle::winding_angle_sum(c, backward_probe());
  CHECK(minus_wind == 1);
}

TEST_CASE("boundary samples of the signed regions map onto the signed contours") {
  const PoseTrajectory traj = backward_sweep_mission();
  const SensorConfig cfg = backward_sensor();
  const SignedRegionDecomposition dec = decompose_signed_regions(traj, cfg, 1.0 / 256.0);
  const ContourOptions opts;
  const SignedContours sc = build_signed_contours(traj, cfg, dec, opts);
  // Map a few decomposition boundary corners forward; each image must land
  // near some signed contour (within the sampling step).
  SegmentSoA all;
  for (const Cycle& c : sc.gamma_plus)
    for (std::size_t i = 0; i < c.size(); ++i) all.push(c.segment(i));
  for (const Cycle& c : sc.gamma_minus)
    for (std::size_t i = 0; i < c.size(); ++i) all.push(c.segment(i));
  int checked = 0;
  for (const WaterfallRect& cell : dec.s_minus) {
    const Point2 img = sweep_point({cell.u.lo, cell.t.lo}, traj, cfg);
    // Corners of s_minus cells adjacent to s_plus regions are on the
    // boundary only where they touch; sample the cell's own boundary corner.
    const double d = std::sqrt(kernels::min_dist_sq(all, img));
    if (d < 10.0 * opts.sampling) ++checked;
  }
  CHECK(checked > 0);
}
