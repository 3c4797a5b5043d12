// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "missions.hpp"
#include "sweepcov/arrangement.hpp"
#include "sweepcov/errors.hpp"
#include "sweepcov/contour.hpp"
#include "sweepcov/oracle.hpp"

using namespace sweepcov;

namespace {

constexpr double kPi = std::numbers::pi;

Cycle rectangle_cycle(bool ccw = true) {
  std::vector<Point2> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({i * 0.25, 0.0});
  for (int i = 0; i < 4; ++i) pts.push_back({10.0, i * 0.25});
  for (int i = 40; i > 0; --i) pts.push_back({i * 0.25, 1.0});
  for (int i = 4; i > 0; --i) pts.push_back({0.0, i * 0.25});
  Cycle c = Cycle::from_points(std::move(pts));
  return ccw ? c : c.reversed();
}

// Bernoulli lemniscate: one transversal crossing, lobes of opposite winding.
Cycle figure_eight(bool flip) {
  std::vector<Point2> pts;
  const int n = 720;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * kPi * (i + 0.37) / n;
    const double den = 1.0 + std::sin(t) * std::sin(t);
    const double y = 2.0 * std::sin(t) * std::cos(t) / den;
    pts.push_back({2.0 * std::cos(t) / den, flip ? -y : y});
  }
  return Cycle::from_points(std::move(pts));
}

CellComplex complex_of(const Cycle& c) {
  return CellComplex::build(c, find_self_intersections(c));
}

}  // namespace

TEST_CASE("rectangle: two faces, labels 1/0, CW flips to -1") {
  const CellComplex cx = complex_of(rectangle_cycle());
  CHECK(cx.vertex_count() == 0);
  CHECK(cx.edge_count() == 1);
  CHECK(cx.face_count() == 2);
  CHECK(cx.extended_winding({5.0, 0.5}) == 1);
  CHECK(cx.extended_winding({5.0, -0.5}) == 0);
  CHECK(cx.extended_winding({5.0, 0.0}) == 1);  // on the edge: limsup
  CHECK(cx.extended_winding({11.0, 0.0}) == 0);

  const CellComplex cw = complex_of(rectangle_cycle(false));
  CHECK(cw.extended_winding({5.0, 0.5}) == -1);
  CHECK(cw.extended_winding({5.0, -0.5}) == 0);
  CHECK(cw.min_label() == -1);
}

TEST_CASE("figure-eight: 1 vertex, 2 edges, 3 faces") {
  const CellComplex cx = complex_of(figure_eight(false));
  CHECK(cx.vertex_count() == 1);
  CHECK(cx.edge_count() == 2);
  CHECK(cx.face_count() == 3);
  // A transversal eight has one CCW and one CW lobe.
  const int right = cx.extended_winding({1.0, 0.0});
  const int left = cx.extended_winding({-1.0, 0.0});
  CHECK(right * left == -1);
  CHECK(cx.extended_winding({3.5, 0.0}) == 0);

  const CellComplex mirrored = complex_of(figure_eight(true));
  CHECK(mirrored.extended_winding({1.0, 0.0}) == -right);
  CHECK(mirrored.extended_winding({-1.0, 0.0}) == -left);
}

TEST_CASE("running mission: 4 vertices, 8 edges, 6 faces, lens label 2") {
  const PoseTrajectory traj = sweepcov::testing::running_mission();
  const Cycle c = build_contour(traj, sweepcov::testing::running_sensor());
  const CellComplex cx = complex_of(c);
  CHECK(cx.vertex_count() == 4);
  CHECK(cx.edge_count() == 8);
  CHECK(cx.face_count() == 6);
  CHECK(cx.max_label() == 2);
  CHECK(cx.unbounded_face() < cx.face_count());
  CHECK(cx.faces()[cx.unbounded_face()].label == 0);
}

TEST_CASE("every face label matches the angle-sum oracle at an interior point") {
  const PoseTrajectory traj = sweepcov::testing::running_mission();
  const Cycle c = build_contour(traj, sweepcov::testing::running_sensor());
  const CellComplex cx = complex_of(c);
  for (std::uint32_t f = 0; f < cx.face_count(); ++f) {
    if (f == cx.unbounded_face()) continue;
    const Point2 q = cx.face_interior_point(f);
    CHECK(cx.faces()[f].label == oracle::winding_angle_sum(c, q));
  }
}

TEST_CASE("Moebius rule holds across every edge") {
  const PoseTrajectory traj = sweepcov::testing::backward_sweep_mission();
  const Cycle c = build_contour(traj, sweepcov::testing::backward_sensor());
  const CellComplex cx = complex_of(c);
  for (const ArrangementEdge& e : cx.edges()) {
    CHECK(cx.faces()[e.left_face].label - cx.faces()[e.right_face].label == 1);
  }
}

TEST_CASE("winding sets are nested and level sets match labels") {
  const PoseTrajectory traj = sweepcov::testing::running_mission();
  const Cycle c = build_contour(traj, sweepcov::testing::running_sensor());
  const CellComplex cx = complex_of(c);
  const std::vector<WindingSet> sets = winding_sets(cx);
  REQUIRE(sets.size() == 2);
  CHECK(sets[0].level == 1);
  CHECK(sets[1].level == 2);
  CHECK(!sets[0].boundary_loops.empty());
  CHECK(!sets[1].boundary_loops.empty());

  std::mt19937 rng(12);
  std::uniform_real_distribution<double> ux(-8.0, 3.0), uy(-4.0, 6.0);
  for (int i = 0; i < 400; ++i) {
    const Point2 p{ux(rng), uy(rng)};
    // Nesting: W2 contained in W1.
    if (sets[1].contains(p)) CHECK(sets[0].contains(p));
    // Membership agrees with labels.
    const int w = cx.extended_winding(p);
    CHECK(sets[0].contains(p) == (w >= 1));
    CHECK(sets[1].contains(p) == (w >= 2));
  }
}

TEST_CASE("figure-eight with opposite lobes has only W1 over the CCW lobe") {
  const CellComplex cx = complex_of(figure_eight(true));
  const std::vector<WindingSet> sets = winding_sets(cx);
  REQUIRE(sets.size() == 1);
  const bool right_ccw = cx.extended_winding({1.0, 0.0}) == 1;
  const Point2 inside = right_ccw ? Point2{1.0, 0.0} : Point2{-1.0, 0.0};
  const Point2 outside = right_ccw ? Point2{-1.0, 0.0} : Point2{1.0, 0.0};
  CHECK(sets[0].contains(inside));
  CHECK(!sets[0].contains(outside));
}

TEST_CASE("negative levels come from the mirrored cycle") {
  const Cycle cw = rectangle_cycle(false);
  const CellComplex cx = complex_of(cw);
  CHECK(winding_sets(cx).empty());  // max label is -1
  const CellComplex mirrored = complex_of(cw.reversed());
  const std::vector<WindingSet> sets = winding_sets(mirrored);
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].contains({5.0, 0.5}));
  CHECK(!sets[0].contains({5.0, 2.0}));
}

TEST_CASE("extended winding equals oracle on random cycles") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-4.5, 4.5);
  int cycles_done = 0;
  for (unsigned seed = 0; cycles_done < 10 && seed < 40; ++seed) {
    const Cycle c = sweepcov::testing::random_fourier_cycle(seed, 700);
    std::vector<SelfIntersection> xs;
    try {
      xs = find_self_intersections(c);
    } catch (const AssumptionError&) {
      continue;  // degenerate draw
    }
    const CellComplex cx = CellComplex::build(c, xs);
    ++cycles_done;
    int queries = 0;
    while (queries < 40) {
      const Point2 p{u(rng), u(rng)};
      if (cx.dist_to_curve_sq(p) <= 4.0 * kDefaultTol * kDefaultTol) continue;
      ++queries;
      CHECK(cx.extended_winding(p) == oracle::winding_angle_sum(c, p));
    }
  }
  CHECK(cycles_done == 10);
}
