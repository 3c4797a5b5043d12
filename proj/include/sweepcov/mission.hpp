// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sweepcov/coverage.hpp"
#include "sweepcov/mission_io.hpp"
#include "sweepcov/tube.hpp"

namespace sweepcov {

struct MissionConfig {
  std::string traj_path;           // trajectory CSV (required unless tube given)
  std::string tube_path;           // tube CSV -> uncertain pipeline
  double inflate = 0.0;            // position inflation radius -> uncertain pipeline
  double inflate_vel = 0.0;        // velocity inflation radius (with --inflate)
  SensorConfig sensor;
  Box2 roi;
  double epsilon = 0.05;
  PipelineOptions pipeline;
  std::vector<double> split_times;  // mission cut times (ascending)
  std::string out_base;             // output base path
  bool svg = false;
  bool trace = false;               // also write contour/complex trace files
  double consistency_tol = 0.5;
};

struct PartResult {
  std::string name;  // "" or "part1", ...
  Paving paving;
  ExploredArea area;
  int max_coverage = 0;
  bool uncertain = false;
  std::vector<std::string> notes;
  std::vector<std::string> assumption_violations;
};

struct MissionResult {
  std::vector<PartResult> parts;
  std::string summary_text;
  std::vector<std::string> files_written;
};

// Runs ingestion, pipeline, classification and serialization. Throws
// AssumptionError / InputError; the CLI maps those to exit codes 2 / 3.
MissionResult run_mission(const MissionConfig& cfg);

std::string summary_to_string(const MissionConfig& cfg, const MissionResult& result);

}  // namespace sweepcov
