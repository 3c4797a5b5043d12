// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Criteria cover oracle equivalence, the backward-sweep
// correction, degree axioms, the documented winding-set structure, paving
// soundness with closed-form areas, uncertain enclosure, the documented
// method limitation and artifact determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "missions.hpp"
#include "sweepcov/arrangement.hpp"
#include "sweepcov/contour.hpp"
#include "sweepcov/coverage.hpp"
#include "sweepcov/errors.hpp"
#include "sweepcov/mission.hpp"
#include "sweepcov/mission_io.hpp"
#include "sweepcov/oracle.hpp"
#include "sweepcov/tube.hpp"

using namespace sweepcov;
using namespace sweepcov::testing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
  int failures = 0;
  int index = 0;

  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    ++index;
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d [%s]: %s (%.1fs)%s%s\n", index, name.c_str(),
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " - ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

Cycle rectangle_cycle() {
  std::vector<Point2> pts;
  for (int i = 0; i < 40; ++i) pts.push_back({i * 0.25, 0.0});
  for (int i = 0; i < 4; ++i) pts.push_back({10.0, i * 0.25});
  for (int i = 40; i > 0; --i) pts.push_back({i * 0.25, 1.0});
  for (int i = 4; i > 0; --i) pts.push_back({0.0, i * 0.25});
  return Cycle::from_points(std::move(pts));
}

Cycle circle_cycle(int n = 360) {
  std::vector<Point2> pts;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * kPi * i / n;
    pts.push_back({2.0 * std::cos(a), 2.0 * std::sin(a)});
  }
  return Cycle::from_points(std::move(pts));
}

// Smoothly displaced copy of a cycle, max displacement <= delta.
Cycle displaced(const Cycle& c, unsigned seed, double delta) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double a1 = u(rng), a2 = u(rng), b1 = u(rng), b2 = u(rng), p1 = kPi * u(rng),
         p2 = kPi * u(rng);
  const double norm = std::abs(a1) + std::abs(a2);
  const double norm2 = std::abs(b1) + std::abs(b2);
  std::vector<Point2> pts(c.points());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double s = 2.0 * kPi * c.taus()[i];
    const double dx = delta * (a1 * std::sin(s + p1) + a2 * std::sin(2 * s + p2)) /
                      std::max(norm, 1e-9);
    const double dy = delta * (b1 * std::cos(s + p2) + b2 * std::sin(3 * s + p1)) /
                      std::max(norm2, 1e-9);
    pts[i] = {pts[i].x + dx, pts[i].y + dy};
  }
  return Cycle::from_points(std::move(pts));
}

// criterion 1: extended winding vs angle-sum oracle on random cycles.
bool criterion_oracle_winding(std::string& detail) {
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> span(-4.8, 4.8);
  std::uniform_int_distribution<int> sizes(300, 2000);
  int cycles_done = 0;
  long queries = 0;
  for (unsigned seed = 0; cycles_done < 100 && seed < 300; ++seed) {
    const Cycle c = random_fourier_cycle(seed, sizes(rng));
    std::vector<SelfIntersection> xs;
    try {
      xs = find_self_intersections(c);
    } catch (const AssumptionError&) {
      continue;  // degenerate draw, deterministic skip
    }
    const CellComplex cx = CellComplex::build(c, xs);
    ++cycles_done;
    int done = 0;
    while (done < 50) {
      const Point2 p{span(rng), span(rng)};
      if (cx.dist_to_curve_sq(p) <= 4.0 * kDefaultTol * kDefaultTol) continue;
      ++done;
      ++queries;
      if (cx.extended_winding(p) != oracle::winding_angle_sum(c, p)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "mismatch at (%g, %g) seed %u", p.x, p.y, seed);
        detail = buf;
        return false;
      }
    }
  }
  detail = std::to_string(cycles_done) + " cycles, " + std::to_string(queries) +
           " queries, all exact";
  return cycles_done == 100;
}

// criterion 2: coverage measure vs kernel-count oracle on det>0 missions.
bool criterion_oracle_coverage(std::string& detail) {
  std::mt19937 rng(4242);
  int missions_done = 0;
  long queries = 0;
  for (unsigned seed = 0; missions_done < 20 && seed < 60; ++seed) {
    const PoseTrajectory traj = random_det_positive_mission(seed);
    const SensorConfig cfg{1.0, SensorSide::left};
    CoverageField field;
    try {
      field = CoverageField::build(traj, cfg);
    } catch (const AssumptionError&) {
      continue;
    }
    if (!field.decomposition().all_positive()) continue;
    ++missions_done;
    const oracle::KernelCountGrid grid(traj, cfg, 260);

    Box2 bb = Box2::empty();
    for (const LabeledCycle& lc : field.loops())
      for (const Point2& p : lc.cycle.points()) bb = hull(bb, p);
    std::uniform_real_distribution<double> ux(bb.x.lo - 0.5, bb.x.hi + 0.5);
    std::uniform_real_distribution<double> uy(bb.y.lo - 0.5, bb.y.hi + 0.5);
    int done = 0, attempts = 0;
    while (done < 25 && attempts < 4000) {
      ++attempts;
      const Point2 p{ux(rng), uy(rng)};
      bool near = false;
      for (const LabeledCycle& lc : field.loops())
        near |= lc.complex.dist_to_curve_sq(p) <= 1e-4;
      if (near) continue;
      int kc = 0;
      try {
        kc = grid.count(p);
      } catch (const std::invalid_argument&) {
        continue;  // near the waterfall boundary: oracle precondition
      }
      ++done;
      ++queries;
      if (field.measure(p) != kc) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "mismatch at (%g, %g) seed %u: field %d oracle %d",
                      p.x, p.y, seed, field.measure(p), kc);
        detail = buf;
        return false;
      }
    }
  }
  detail = std::to_string(missions_done) + " missions, " + std::to_string(queries) +
           " queries, all exact";
  return missions_done == 20;
}

// criterion 3: backward sweep correction (plain winding 1, coverage 3).
bool criterion_backward_sweep(std::string& detail) {
  const PoseTrajectory traj = backward_sweep_mission();
  const SensorConfig cfg = backward_sensor();
  const Point2 p = backward_probe();
  const int plain = contour_complex(traj, cfg).extended_winding(p);
  const int corrected = CoverageField::build(traj, cfg).measure(p);
  const int kernel = oracle::kernel_count(traj, cfg, p, 500);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "plain winding %d, corrected coverage %d, oracle %d",
                plain, corrected, kernel);
  detail = buf;
  return plain == 1 && corrected == 3 && kernel == 3;
}

// criterion 4: degree axioms (identity + homotopy invariance).
bool criterion_degree_axioms(std::string& detail) {
  struct Fixture {
    Cycle cycle;
    Point2 in_pt, out_pt;
  };
  const std::vector<Fixture> fixtures{
      {rectangle_cycle(), {5.0, 0.5}, {5.0, 3.0}},
      {circle_cycle(), {0.0, 0.0}, {3.5, 0.0}},
  };
  for (const auto& [base, in_pt, out_pt] : fixtures) {
    const CellComplex cx = CellComplex::build(base, find_self_intersections(base));
    if (cx.extended_winding(in_pt) != 1 || cx.extended_winding(out_pt) != 0) {
      detail = "identity axiom failed";
      return false;
    }
    for (const Point2& p : {in_pt, out_pt}) {
      const double dist = std::sqrt(cx.dist_to_curve_sq(p));
      const int expected = cx.extended_winding(p);
      for (unsigned seed = 1; seed <= 50; ++seed) {
        const Cycle moved = displaced(base, seed, 0.45 * dist);
        const CellComplex mx = CellComplex::build(moved, find_self_intersections(moved));
        if (mx.extended_winding(p) != expected) {
          detail = "homotopy invariance failed at seed " + std::to_string(seed);
          return false;
        }
      }
    }
  }
  detail = "identity + 50 perturbations per query";
  return true;
}

// criterion 5: the documented winding-set structure of the running mission.
bool criterion_winding_structure(std::string& detail) {
  const PoseTrajectory traj = running_mission();
  const Cycle c = build_contour(traj, running_sensor());
  const CellComplex cx = CellComplex::build(c, find_self_intersections(c));
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%zu vertices, %zu edges, %zu faces, max label %d",
                cx.vertex_count(), cx.edge_count(), cx.face_count(), cx.max_label());
  detail = buf;
  if (cx.vertex_count() != 4 || cx.edge_count() != 8 || cx.face_count() != 6 ||
      cx.max_label() != 2)
    return false;
  const std::vector<WindingSet> sets = winding_sets(cx);
  if (sets.size() != 2) return false;
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> ux(-8.0, 3.0), uy(-4.5, 6.0);
  for (int i = 0; i < 500; ++i) {
    const Point2 p{ux(rng), uy(rng)};
    if (sets[1].contains(p) && !sets[0].contains(p)) {
      detail += "; nesting violated";
      return false;
    }
  }
  return true;
}

// criterion 6: paving soundness and closed-form explored areas.
bool criterion_paving_areas(std::string& detail) {
  const double eps = 0.05;
  // Straight mission: explored rectangle of exactly 10 m^2.
  const PoseTrajectory straight = straight_mission();
  const Paving p1 =
      classify_roi(straight, {1.0, SensorSide::left}, {{-1.0, 12.0}, {-1.0, 2.0}}, eps);
  const ExploredArea a1 = explored_area(p1);
  char buf[160];
  if (!(a1.inner_area <= 10.0 && 10.0 <= a1.outer_area &&
        a1.outer_area - a1.inner_area <= 4.0 * eps * 22.0)) {
    std::snprintf(buf, sizeof(buf), "straight: inner %.3f outer %.3f", a1.inner_area,
                  a1.outer_area);
    detail = buf;
    return false;
  }

  // Two-loop annulus over the ring [4, 6]: explored area 20 pi.
  const PoseTrajectory loops = annulus_20pi_mission();
  const CoverageField field = CoverageField::build(loops, two_loop_sensor());
  const Paving p2 = classify_roi(field, {{-7.0, 7.0}, {-7.0, 7.0}}, eps);
  const ExploredArea a2 = explored_area(p2);
  double perimeter = 0.0;
  for (const LabeledCycle& lc : field.loops()) perimeter += lc.cycle.length();
  const double target = 20.0 * kPi;
  const double model_slack = 2.0 * kPi * 6.2 * 0.03;  // radius drift + overshoot
  const double collar = 4.0 * eps * perimeter;
  std::snprintf(buf, sizeof(buf),
                "straight [%.3f, %.3f]; annulus [%.2f, %.2f] vs %.2f (collar %.1f)",
                a1.inner_area, a1.outer_area, a2.inner_area, a2.outer_area, target,
                collar);
  detail = buf;
  return a2.inner_area <= target + model_slack &&
         a2.outer_area >= target - model_slack &&
         a2.outer_area - a2.inner_area <= collar;
}

// criterion 7: uncertain enclosure, degenerate reduction, [2,2] clear zone.
bool criterion_uncertain_enclosure(std::string& detail) {
  const PoseTrajectory nominal = running_mission();
  const SensorConfig cfg = running_sensor();
  const double rpos = 0.12;
  const Tube tube = Tube::from_trajectory(nominal, rpos, 0.08);
  ContourTube ct = build_contour_tube(tube, cfg);
  const std::vector<UncertainVertex> vertices = find_uncertain_intersections(ct, tube);
  const ThickField field = ThickField::build(std::move(ct), vertices, {});

  // Grid probes over the mission area.
  std::vector<Point2> probes;
  for (double x = -7.5; x <= 2.5; x += 0.5)
    for (double y = -3.5; y <= 5.5; y += 0.5) probes.push_back({x, y});

  long checks = 0;
  for (unsigned seed = 1; seed <= 20; ++seed) {
    const PoseTrajectory sample = perturb_mission(nominal, seed, 0.8 * rpos);
    const CoverageField certain = CoverageField::build(sample, cfg);
    for (const Point2& p : probes) {
      const CoverageValue enc = field.value_at(p);
      const int got = certain.measure(p);
      ++checks;
      if (got < enc.lo || got > enc.hi) {
        char buf[160];
        std::snprintf(buf, sizeof(buf), "violation at (%g, %g) seed %u: %d not in [%d, %d]",
                      p.x, p.y, seed, got, enc.lo, enc.hi);
        detail = buf;
        return false;
      }
    }
  }

  // Degenerate tube reduces to the certain pipeline.
  const Tube degenerate = Tube::from_trajectory(nominal, 0.0, 0.0);
  ContourTube dct = build_contour_tube(degenerate, cfg);
  const std::vector<UncertainVertex> dverts = find_uncertain_intersections(dct, degenerate);
  const ThickField dfield = ThickField::build(std::move(dct), dverts, {});
  const CoverageField certain = CoverageField::build(nominal, cfg);
  std::mt19937 rng(66);
  std::uniform_real_distribution<double> ux(-8.0, 3.0), uy(-4.0, 6.0);
  int compared = 0;
  while (compared < 300) {
    const Point2 p{ux(rng), uy(rng)};
    if (dfield.contour_tube().penumbra_contains(p)) continue;
    const CoverageValue v = dfield.value_at(p);
    if (!v.singleton() || v.lo != certain.measure(p)) {
      detail = "degenerate reduction mismatch";
      return false;
    }
    ++compared;
  }

  // Clear zone of the second thick winding set.
  const Tube small = Tube::from_trajectory(nominal, 0.05, 0.05);
  ContourTube sct = build_contour_tube(small, cfg);
  const std::vector<UncertainVertex> sverts = find_uncertain_intersections(sct, small);
  const ThickField sfield = ThickField::build(std::move(sct), sverts, {});
  if (!(sfield.value_at({-1.5, 0.5}) == CoverageValue{2, 2})) {
    detail = "lens clear zone is not [2,2]";
    return false;
  }
  detail = std::to_string(checks) + " enclosure checks, zero violations";
  return true;
}

// criterion 8: the documented limitation and mission splitting.
bool criterion_limitation_split(std::string& detail) {
  const PoseTrajectory traj = out_and_back_mission();
  const SensorConfig cfg = out_and_back_sensor();
  const Tube tube = Tube::from_trajectory(traj, 0.25, 0.1);
  bool rejected = false;
  std::string msg;
  try {
    ContourTube ct = build_contour_tube(tube, cfg);
    static_cast<void>(find_uncertain_intersections(ct, tube));
  } catch (const AssumptionError& e) {
    msg = e.what();
    rejected = msg.find("colinear uncertain crossing") != std::string::npos;
  }
  if (!rejected) {
    detail = "overlapping passes were not rejected";
    return false;
  }
  const double cut = out_and_back_turn_time();
  for (const auto& [t0, t1] :
       {std::pair{tube.t_start(), cut}, std::pair{cut, tube.t_end()}}) {
    const Tube part = tube.time_slice(t0, t1);
    ContourTube pct = build_contour_tube(part, cfg);
    const std::vector<UncertainVertex> pverts = find_uncertain_intersections(pct, part);
    const ThickField field = ThickField::build(std::move(pct), pverts, {});
    const Paving paving = classify_roi(field, {{-2.0, 12.0}, {-2.0, 5.0}}, 0.25);
    if (paving.leaves.empty()) {
      detail = "split part failed to classify";
      return false;
    }
  }
  detail = "rejected (\"" + msg + "\"), both halves classified";
  return true;
}

// criterion 9: byte-deterministic artifacts.
bool criterion_determinism(std::string& detail) {
  const std::string dir = "./acceptance_tmp";
  std::filesystem::create_directories(dir);
  std::string csv = "t,x,y,psi\n";
  for (int i = 0; i <= 60; ++i)
    csv += std::to_string(0.2 * i) + "," + std::to_string(0.2 * i) + ",0,0\n";
  write_text_file(dir + "/traj.csv", csv);
  MissionConfig cfg;
  cfg.traj_path = dir + "/traj.csv";
  cfg.sensor = {1.0, SensorSide::left};
  cfg.roi = {{-1.0, 13.0}, {-1.0, 2.0}};
  cfg.epsilon = 0.1;
  cfg.out_base = dir + "/out";
  run_mission(cfg);
  const std::string paving1 = read_text_file(dir + "/out.paving.txt");
  const std::string summary1 = read_text_file(dir + "/out.summary.txt");
  run_mission(cfg);
  const bool same = paving1 == read_text_file(dir + "/out.paving.txt") &&
                    summary1 == read_text_file(dir + "/out.summary.txt");
  std::filesystem::remove_all(dir);
  detail = same ? "paving and summary byte-identical" : "outputs differ between runs";
  return same;
}

}  // namespace

int main() {
  Harness h;
  h.run("oracle equivalence: winding", criterion_oracle_winding);
  h.run("oracle equivalence: coverage", criterion_oracle_coverage);
  h.run("backward-sweep correction", criterion_backward_sweep);
  h.run("degree axioms", criterion_degree_axioms);
  h.run("winding-set structure", criterion_winding_structure);
  h.run("paving soundness and areas", criterion_paving_areas);
  h.run("uncertain enclosure", criterion_uncertain_enclosure);
  h.run("limitation and splitting", criterion_limitation_split);
  h.run("determinism", criterion_determinism);
  if (h.failures == 0) {
    std::printf("all %d criteria passed\n", h.index);
  } else {
    std::printf("%d of %d criteria FAILED\n", h.failures, h.index);
  }
  return h.failures == 0 ? 0 : 1;
}
