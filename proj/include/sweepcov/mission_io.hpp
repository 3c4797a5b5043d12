// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sweepcov/coverage.hpp"
#include "sweepcov/trajectory.hpp"
#include "sweepcov/tube.hpp"

namespace sweepcov {

inline constexpr const char* kToolVersion = "sweepcov 1.0.0";

struct TrajectoryLoad {
  PoseTrajectory traj;
  std::vector<std::string> notes;  // reconstructed columns, consistency warnings
};

// CSV with header t,x,y,psi[,vx,vy[,ax,ay]]; '.' decimal separator, SI
// units. Missing velocity/acceleration columns are reconstructed by central
// finite differences (noted in the load report). psi is unwrapped on load.
// Throws InputError with the offending row on malformed data.
TrajectoryLoad load_trajectory_csv(const std::string& path, double consistency_tol = 0.5);
TrajectoryLoad parse_trajectory_csv(const std::string& text, double consistency_tol = 0.5);

// CSV with header t,x_lo,x_hi,y_lo,y_hi,vx_lo,vx_hi,vy_lo,vy_hi.
Tube load_tube_csv(const std::string& path);
Tube parse_tube_csv(const std::string& text);

// Line-oriented paving file: header block (tool version, roi, epsilon),
// then one leaf per line "x_lo x_hi y_lo y_hi cm_lo cm_hi" in the paving's
// deterministic depth-first order. Byte-deterministic for equal inputs.
std::string paving_to_string(const Paving& paving);
Paving paving_from_string(const std::string& text);
void write_paving(const Paving& paving, const std::string& path);
Paving read_paving(const std::string& path);

// SVG rendering: one fill per coverage label, uncertain leaves black,
// contours overlaid.
std::string paving_to_svg(const Paving& paving, const std::vector<const Cycle*>& contours);

// Trace export: every signed contour loop as a closed polyline record plus
// its cell complex (vertices, edges, labeled faces). Line oriented and
// deterministic.
std::string trace_to_string(const CoverageField& field);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sweepcov
