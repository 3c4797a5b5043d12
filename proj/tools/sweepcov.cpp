// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

// Command line front end: `sweepcov run` classifies a mission's coverage,
// `sweepcov oracle` exposes the brute-force references for debugging.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sweepcov/errors.hpp"
#include "sweepcov/mission.hpp"
#include "sweepcov/oracle.hpp"

namespace {

using sweepcov::MissionConfig;

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const sweepcov::AssumptionError*>(&e)) return 2;
  if (dynamic_cast<const sweepcov::InputError*>(&e)) return 3;
  return 1;
}

sweepcov::SensorSide parse_side(const std::string& side) {
  if (side == "left") return sweepcov::SensorSide::left;
  if (side == "right") return sweepcov::SensorSide::right;
  if (side == "both") return sweepcov::SensorSide::both;
  throw sweepcov::InputError("side must be left, right or both");
}

void apply_config_file(MissionConfig& cfg, const std::string& path) {
  const nlohmann::json j = nlohmann::json::parse(sweepcov::read_text_file(path));
  if (j.contains("traj")) cfg.traj_path = j["traj"].get<std::string>();
  if (j.contains("tube")) cfg.tube_path = j["tube"].get<std::string>();
  if (j.contains("range")) cfg.sensor.range_L = j["range"].get<double>();
  if (j.contains("side")) cfg.sensor.side = parse_side(j["side"].get<std::string>());
  if (j.contains("roi")) {
    const auto roi = j["roi"].get<std::vector<double>>();
    if (roi.size() != 4) throw sweepcov::InputError("roi needs 4 numbers");
    cfg.roi = {{roi[0], roi[1]}, {roi[2], roi[3]}};
  }
  if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
  if (j.contains("tol")) cfg.pipeline.tol = j["tol"].get<double>();
  if (j.contains("inflate")) cfg.inflate = j["inflate"].get<double>();
  if (j.contains("out")) cfg.out_base = j["out"].get<std::string>();
  if (j.contains("svg")) cfg.svg = j["svg"].get<bool>();
  if (j.contains("split")) cfg.split_times = j["split"].get<std::vector<double>>();
}

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  for (const char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) {
        try {
          std::size_t used = 0;
          out.push_back(std::stod(cur, &used));
          if (used != cur.size()) throw std::invalid_argument(cur);
        } catch (const std::exception&) {
          throw sweepcov::InputError("not a number: '" + cur + "'");
        }
      }
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-sweep sensor coverage measure and explored-area classifier"};
  app.require_subcommand(1);

  // --- run ---
  auto* run = app.add_subcommand("run", "classify a mission's coverage over a region");
  std::string traj_path, tube_path, side = "left", roi_text, out_base, config_path,
              split_text;
  double range = 1.0, epsilon = 0.05, tol = sweepcov::kDefaultTol, inflate = 0.0,
         inflate_vel = 0.0, sampling = 0.05;
  bool svg = false, trace = false;
  run->add_option("--traj", traj_path, "trajectory CSV (t,x,y,psi[,vx,vy[,ax,ay]])");
  run->add_option("--tube", tube_path, "tube CSV (uncertain trajectory)");
  run->add_option("--range", range, "sensor range L in meters");
  run->add_option("--side", side, "sensor side: left, right or both");
  run->add_option("--roi", roi_text, "region of interest: xmin,xmax,ymin,ymax");
  run->add_option("--epsilon", epsilon, "paving resolution in meters");
  run->add_option("--tol", tol, "geometric tolerance in meters");
  run->add_option("--sampling", sampling, "contour sampling step in meters");
  run->add_option("--inflate", inflate, "position uncertainty radius (tube from traj)");
  run->add_option("--inflate-vel", inflate_vel, "velocity uncertainty radius");
  run->add_option("--out", out_base, "output base path");
  run->add_option("--split", split_text, "mission cut times t1,t2,...");
  run->add_option("--config", config_path, "JSON config file (flags win)");
  run->add_flag("--svg", svg, "also write an SVG rendering");
  run->add_flag("--trace", trace, "also write contour/complex trace files");

  // --- oracle ---
  auto* orc = app.add_subcommand("oracle", "brute-force reference values for debugging");
  std::string o_traj, o_side = "left", o_point, o_kind = "kernel";
  double o_range = 1.0, o_sampling = 0.05;
  int o_grid = 200;
  orc->add_option("--traj", o_traj, "trajectory CSV")->required();
  orc->add_option("--range", o_range, "sensor range L in meters");
  orc->add_option("--side", o_side, "sensor side");
  orc->add_option("--point", o_point, "query point x,y")->required();
  orc->add_option("--kind", o_kind, "oracle: kernel or winding");
  orc->add_option("--grid", o_grid, "waterfall grid resolution");
  orc->add_option("--sampling", o_sampling, "contour sampling step (winding oracle)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      MissionConfig cfg;
      if (!config_path.empty()) apply_config_file(cfg, config_path);
      if (!traj_path.empty()) cfg.traj_path = traj_path;
      if (!tube_path.empty()) cfg.tube_path = tube_path;
      if (run->count("--range")) cfg.sensor.range_L = range;
      if (run->count("--side")) cfg.sensor.side = parse_side(side);
      if (run->count("--epsilon")) cfg.epsilon = epsilon;
      if (run->count("--tol")) cfg.pipeline.tol = tol;
      if (run->count("--sampling")) cfg.pipeline.sampling = sampling;
      if (run->count("--inflate")) cfg.inflate = inflate;
      if (run->count("--inflate-vel")) cfg.inflate_vel = inflate_vel;
      if (!out_base.empty()) cfg.out_base = out_base;
      if (run->count("--svg")) cfg.svg = svg;
      if (run->count("--trace")) cfg.trace = trace;
      if (!roi_text.empty()) {
        const std::vector<double> roi = parse_csv_doubles(roi_text);
        if (roi.size() != 4) throw sweepcov::InputError("--roi needs 4 numbers");
        cfg.roi = {{roi[0], roi[1]}, {roi[2], roi[3]}};
      }
      if (!split_text.empty()) cfg.split_times = parse_csv_doubles(split_text);

      const sweepcov::MissionResult result = sweepcov::run_mission(cfg);
      std::cout << result.summary_text;
      for (const auto& part : result.parts) {
        if (!part.assumption_violations.empty()) {
          std::cerr << "assumption violation: " << part.assumption_violations.front()
                    << "\n";
          return 2;
        }
      }
      return 0;
    }

    // oracle subcommand
    const std::vector<double> pt = parse_csv_doubles(o_point);
    if (pt.size() != 2) throw sweepcov::InputError("--point needs 2 numbers");
    const sweepcov::TrajectoryLoad load = sweepcov::load_trajectory_csv(o_traj);
    sweepcov::SensorConfig sensor{o_range, parse_side(o_side)};
    if (o_kind == "kernel") {
      std::cout << sweepcov::oracle::kernel_count(load.traj, sensor, {pt[0], pt[1]}, o_grid)
                << "\n";
    } else if (o_kind == "winding") {
      const sweepcov::Cycle contour =
          sweepcov::build_contour(load.traj, sensor, {o_sampling, sweepcov::kDefaultTol});
      std::cout << sweepcov::oracle::winding_angle_sum(contour, {pt[0], pt[1]}) << "\n";
    } else {
      throw sweepcov::InputError("--kind must be kernel or winding");
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
