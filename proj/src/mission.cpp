// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/mission.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

PoseTrajectory trajectory_slice(const PoseTrajectory& traj, double t0, double t1) {
  if (!(t0 < t1)) throw InputError("invalid split times");
  std::vector<PoseSample> samples;
  const auto state_sample = [&](double t) {
    const TrajectoryState st = traj.state_at(t);
    PoseSample s;
    s.t = t;
    s.pose = {st.p.x, st.p.y, st.psi};
    s.vel = {st.v.x, st.v.y, st.psidot};
    s.acc = {st.a.x, st.a.y, st.psiddot};
    return s;
  };
  samples.push_back(state_sample(t0));
  for (const PoseSample& s : traj.samples()) {
    if (s.t > samples.back().t && s.t < t1) samples.push_back(s);
  }
  samples.push_back(state_sample(t1));
  return PoseTrajectory(std::move(samples));
}

PartResult run_certain_part(const MissionConfig& cfg, const PoseTrajectory& traj,
                            const std::string& name) {
  PartResult part;
  part.name = name;
  const CoverageField field = CoverageField::build(traj, cfg.sensor, cfg.pipeline);
  for (const AssumptionReport& report : field.reports()) {
    for (const auto& item : report.violations)
      part.assumption_violations.push_back(item.kind + ": " + item.message);
  }
  part.paving = classify_roi(field, cfg.roi, cfg.epsilon);
  part.area = explored_area(part.paving);
  part.max_coverage = field.max_coverage_label();
  if (cfg.trace && !cfg.out_base.empty()) {
    const std::string path = cfg.out_base + (name.empty() ? "" : "." + name) + ".trace.txt";
    write_text_file(path, trace_to_string(field));
    part.notes.push_back("trace " + path);
  }
  if (cfg.svg && !cfg.out_base.empty()) {
    std::vector<const Cycle*> contours;
    for (const LabeledCycle& lc : field.loops()) contours.push_back(&lc.cycle);
    const std::string path = cfg.out_base + (name.empty() ? "" : "." + name) + ".svg";
    write_text_file(path, paving_to_svg(part.paving, contours));
    part.notes.push_back("svg " + path);
  }
  return part;
}

PartResult run_uncertain_part(const MissionConfig& cfg, const Tube& tube,
                              const std::string& name) {
  PartResult part;
  part.name = name;
  part.uncertain = true;
  ContourTube ct = build_contour_tube(tube, cfg.sensor, cfg.pipeline);
  const std::vector<UncertainVertex> vertices =
      find_uncertain_intersections(ct, tube, cfg.pipeline);
  const ThickField field = ThickField::build(std::move(ct), vertices, cfg.pipeline);
  part.paving = classify_roi(field, cfg.roi, cfg.epsilon);
  part.area = explored_area(part.paving);
  part.max_coverage = std::max(field.max_level(), 0);
  if (cfg.svg && !cfg.out_base.empty()) {
    const std::vector<const Cycle*> contours{&field.contour_tube().nominal};
    const std::string path = cfg.out_base + (name.empty() ? "" : "." + name) + ".svg";
    write_text_file(path, paving_to_svg(part.paving, contours));
    part.notes.push_back("svg " + path);
  }
  return part;
}

}  // namespace

MissionResult run_mission(const MissionConfig& cfg) {
  if (cfg.roi.is_empty()) throw InputError("roi must be nonempty");
  if (!(cfg.epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (!(cfg.sensor.range_L > 0.0)) throw InputError("sensor range must be positive");

  MissionResult result;
  const bool uncertain = !cfg.tube_path.empty() || cfg.inflate > 0.0;

  std::optional<PoseTrajectory> traj;
  std::optional<Tube> tube;
  std::vector<std::string> load_notes;
  if (!cfg.tube_path.empty()) {
    tube = load_tube_csv(cfg.tube_path);
  } else {
    if (cfg.traj_path.empty()) throw InputError("no trajectory or tube input");
    TrajectoryLoad load = load_trajectory_csv(cfg.traj_path, cfg.consistency_tol);
    load_notes = load.notes;
    if (uncertain)
      tube = Tube::from_trajectory(load.traj, cfg.inflate, cfg.inflate_vel);
    else
      traj = std::move(load.traj);
  }

  // Split into parts at the cut times.
  const double t0 = uncertain ? tube->t_start() : traj->t_start();
  const double t1 = uncertain ? tube->t_end() : traj->t_end();
  std::vector<double> cuts{t0};
  for (const double c : cfg.split_times) {
    if (c <= cuts.back() || c >= t1) throw InputError("split time out of range");
    cuts.push_back(c);
  }
  cuts.push_back(t1);

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const std::string name = cuts.size() > 2 ? "part" + std::to_string(k + 1) : "";
    PartResult part =
        uncertain
            ? run_uncertain_part(cfg, tube->time_slice(cuts[k], cuts[k + 1]), name)
            : run_certain_part(cfg, trajectory_slice(*traj, cuts[k], cuts[k + 1]), name);
    part.notes.insert(part.notes.begin(), load_notes.begin(), load_notes.end());
    if (!cfg.out_base.empty()) {
      const std::string path =
          cfg.out_base + (name.empty() ? "" : "." + name) + ".paving.txt";
      write_paving(part.paving, path);
      result.files_written.push_back(path);
    }
    result.parts.push_back(std::move(part));
  }

  result.summary_text = summary_to_string(cfg, result);
  if (!cfg.out_base.empty()) {
    const std::string path = cfg.out_base + ".summary.txt";
    write_text_file(path, result.summary_text);
    result.files_written.push_back(path);
  }
  return result;
}

std::string summary_to_string(const MissionConfig& cfg, const MissionResult& result) {
  std::string out;
  out += std::string(kToolVersion) + " summary\n";
  out += "input " + (cfg.tube_path.empty() ? cfg.traj_path : cfg.tube_path) + "\n";
  out += "side " + to_string(cfg.sensor.side) + "\n";
  out += "range_L " + fmt(cfg.sensor.range_L) + "\n";
  out += "roi " + fmt(cfg.roi.x.lo) + " " + fmt(cfg.roi.x.hi) + " " + fmt(cfg.roi.y.lo) +
         " " + fmt(cfg.roi.y.hi) + "\n";
  out += "epsilon " + fmt(cfg.epsilon) + "\n";
  out += "tolerance " + fmt(cfg.pipeline.tol) + "\n";
  if (cfg.inflate > 0.0) out += "inflate " + fmt(cfg.inflate) + "\n";

  for (const PartResult& part : result.parts) {
    const std::string prefix = part.name.empty() ? "" : part.name + ".";
    out += prefix + "mode " + (part.uncertain ? "uncertain" : "certain") + "\n";
    out += prefix + "leaves " + std::to_string(part.paving.leaves.size()) + "\n";
    std::map<std::pair<int, int>, std::size_t> counts;
    for (const PavingLeaf& leaf : part.paving.leaves)
      ++counts[{leaf.value.lo, leaf.value.hi}];
    for (const auto& [value, count] : counts) {
      out += prefix + "leaves[" + std::to_string(value.first) + "," +
             std::to_string(value.second) + "] " + std::to_string(count) + "\n";
    }
    out += prefix + "max_coverage " + std::to_string(part.max_coverage) + "\n";
    out += prefix + "inner_area_m2 " + fmt(part.area.inner_area) + "\n";
    out += prefix + "outer_area_m2 " + fmt(part.area.outer_area) + "\n";
    if (part.assumption_violations.empty()) {
      out += prefix + "assumptions ok\n";
    } else {
      for (const std::string& v : part.assumption_violations)
        out += prefix + "assumption_violation " + v + "\n";
    }
    for (const std::string& n : part.notes) out += prefix + "note " + n + "\n";
  }
  return out;
}

}  // namespace sweepcov
