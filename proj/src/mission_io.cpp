// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/mission_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r' && !(ch == ' ' && sep == ',')) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, std::size_t row) {
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end)
    throw InputError("invalid value at row " + std::to_string(row) + ": '" + s + "'");
  if (std::isnan(v))
    throw InputError("invalid value at row " + std::to_string(row) + ": NaN");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

TrajectoryLoad parse_trajectory_csv(const std::string& text, double consistency_tol) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty trajectory file");
  const std::vector<std::string> header = split(line, ',');
  const std::vector<std::string> want{"t", "x", "y", "psi", "vx", "vy", "ax", "ay"};
  if (header.size() != 4 && header.size() != 6 && header.size() != 8)
    throw InputError("trajectory header must be t,x,y,psi[,vx,vy[,ax,ay]]");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] != want[i])
      throw InputError("unexpected trajectory column '" + header[i] + "'");
  }
  const bool has_vel = header.size() >= 6;
  const bool has_acc = header.size() >= 8;

  std::vector<PoseSample> samples;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, ',');
    if (cols.size() != header.size())
      throw InputError("wrong column count at row " + std::to_string(row));
    PoseSample s;
    s.t = parse_double(cols[0], row);
    s.pose.x = parse_double(cols[1], row);
    s.pose.y = parse_double(cols[2], row);
    s.pose.psi = parse_double(cols[3], row);
    if (has_vel) {
      s.vel.x = parse_double(cols[4], row);
      s.vel.y = parse_double(cols[5], row);
    }
    if (has_acc) {
      s.acc.x = parse_double(cols[6], row);
      s.acc.y = parse_double(cols[7], row);
    }
    if (!samples.empty() && !(s.t > samples.back().t))
      throw InputError("time order violated at row " + std::to_string(row));
    samples.push_back(s);
  }
  if (samples.size() < 2) throw InputError("too short: need at least 2 rows");

  // Unwrap psi.
  for (std::size_t i = 1; i < samples.size(); ++i) {
    double d = samples[i].pose.psi - samples[i - 1].pose.psi;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    samples[i].pose.psi = samples[i - 1].pose.psi + d;
  }

  TrajectoryLoad load{PoseTrajectory({samples[0], samples[1]}), {}};
  // Reconstruct missing derivatives by central differences.
  const auto central = [&](auto get, std::size_t i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = std::min(i + 1, samples.size() - 1);
    return (get(samples[b]) - get(samples[a])) / (samples[b].t - samples[a].t);
  };
  if (!has_vel) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i].vel.x = central([](const PoseSample& s) { return s.pose.x; }, i);
      samples[i].vel.y = central([](const PoseSample& s) { return s.pose.y; }, i);
    }
    load.notes.push_back("velocities reconstructed by finite differences");
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i].vel.z = central([](const PoseSample& s) { return s.pose.psi; }, i);
  if (!has_acc) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      samples[i].acc.x = central([](const PoseSample& s) { return s.vel.x; }, i);
      samples[i].acc.y = central([](const PoseSample& s) { return s.vel.y; }, i);
    }
    if (has_vel) load.notes.push_back("accelerations reconstructed by finite differences");
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i].acc.z = central([](const PoseSample& s) { return s.vel.z; }, i);

  load.traj = PoseTrajectory(std::move(samples));
  for (std::string& w : consistency_report(load.traj, consistency_tol))
    load.notes.push_back(std::move(w));
  return load;
}

TrajectoryLoad load_trajectory_csv(const std::string& path, double consistency_tol) {
  return parse_trajectory_csv(read_text_file(path), consistency_tol);
}

Tube parse_tube_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty tube file");
  const std::vector<std::string> header = split(line, ',');
  const std::vector<std::string> want{"t",     "x_lo",  "x_hi",  "y_lo", "y_hi",
                                      "vx_lo", "vx_hi", "vy_lo", "vy_hi"};
  if (header.size() != want.size())
    throw InputError("tube header must be t,x_lo,x_hi,y_lo,y_hi,vx_lo,vx_hi,vy_lo,vy_hi");
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (header[i] != want[i]) throw InputError("unexpected tube column '" + header[i] + "'");
  }
  std::vector<TubeRow> rows;
  std::size_t rowno = 1;
  while (std::getline(in, line)) {
    ++rowno;
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, ',');
    if (cols.size() != want.size())
      throw InputError("wrong column count at row " + std::to_string(rowno));
    TubeRow r;
    r.t = parse_double(cols[0], rowno);
    r.pos = {{parse_double(cols[1], rowno), parse_double(cols[2], rowno)},
             {parse_double(cols[3], rowno), parse_double(cols[4], rowno)}};
    r.vel = {{parse_double(cols[5], rowno), parse_double(cols[6], rowno)},
             {parse_double(cols[7], rowno), parse_double(cols[8], rowno)}};
    rows.push_back(r);
  }
  return Tube(std::move(rows));
}

Tube load_tube_csv(const std::string& path) { return parse_tube_csv(read_text_file(path)); }

std::string paving_to_string(const Paving& paving) {
  std::string out;
  out += "# ";
  out += kToolVersion;
  out += " paving\n";
  out += "# roi " + fmt(paving.roi.x.lo) + " " + fmt(paving.roi.x.hi) + " " +
         fmt(paving.roi.y.lo) + " " + fmt(paving.roi.y.hi) + "\n";
  out += "# epsilon " + fmt(paving.epsilon) + "\n";
  out += "# columns x_lo x_hi y_lo y_hi cm_lo cm_hi\n";
  for (const PavingLeaf& leaf : paving.leaves) {
    out += fmt(leaf.box.x.lo) + " " + fmt(leaf.box.x.hi) + " " + fmt(leaf.box.y.lo) + " " +
           fmt(leaf.box.y.hi) + " " + std::to_string(leaf.value.lo) + " " +
           std::to_string(leaf.value.hi) + "\n";
  }
  return out;
}

Paving paving_from_string(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Paving paving;
  bool have_roi = false, have_eps = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tag;
      hs >> tag;
      if (tag == "roi") {
        hs >> paving.roi.x.lo >> paving.roi.x.hi >> paving.roi.y.lo >> paving.roi.y.hi;
        have_roi = true;
      } else if (tag == "epsilon") {
        hs >> paving.epsilon;
        have_eps = true;
      }
      continue;
    }
    std::istringstream ls(line);
    PavingLeaf leaf;
    if (!(ls >> leaf.box.x.lo >> leaf.box.x.hi >> leaf.box.y.lo >> leaf.box.y.hi >>
          leaf.value.lo >> leaf.value.hi))
      throw InputError("malformed paving line " + std::to_string(row));
    paving.leaves.push_back(leaf);
  }
  if (!have_roi || !have_eps) throw InputError("paving header incomplete");
  return paving;
}

void write_paving(const Paving& paving, const std::string& path) {
  write_text_file(path, paving_to_string(paving));
}

Paving read_paving(const std::string& path) {
  return paving_from_string(read_text_file(path));
}

namespace {

const char* fill_of(const CoverageValue& v) {
  if (!v.singleton()) return "#000000";
  switch (v.lo) {
    case 0: return "#ffffff";
    case 1: return "#d3d3d3";
    case 2: return "#808080";
    default: return "#404040";
  }
}

}  // namespace

std::string trace_to_string(const CoverageField& field) {
  std::string out;
  out += "# ";
  out += kToolVersion;
  out += " trace\n";
  for (std::size_t k = 0; k < field.loops().size(); ++k) {
    const LabeledCycle& lc = field.loops()[k];
    const Cycle& c = lc.cycle;
    out += "cycle " + std::to_string(k) + (lc.backward ? " minus" : " plus") +
           " points " + std::to_string(c.size()) + "\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += "p " + fmt(c.points()[i].x) + " " + fmt(c.points()[i].y) + " " +
             fmt(c.taus()[i]) + " " + std::to_string(static_cast<int>(c.sources()[i])) +
             "\n";
    }
    const CellComplex& cx = lc.complex;
    out += "complex " + std::to_string(k) + " vertices " +
           std::to_string(cx.vertex_count()) + " edges " + std::to_string(cx.edge_count()) +
           " faces " + std::to_string(cx.face_count()) + "\n";
    for (std::size_t i = 0; i < cx.vertex_count(); ++i) {
      const SelfIntersection& v = cx.vertices()[i];
      out += "vertex " + std::to_string(i) + " " + fmt(v.point.x) + " " + fmt(v.point.y) +
             " " + fmt(v.tau1) + " " + fmt(v.tau2) + " " + std::to_string(v.update) + "\n";
    }
    for (std::size_t i = 0; i < cx.edge_count(); ++i) {
      const ArrangementEdge& e = cx.edges()[i];
      out += "edge " + std::to_string(i) + " " + std::to_string(static_cast<int>(e.from_vertex)) +
             " " + std::to_string(static_cast<int>(e.to_vertex)) + " " + fmt(e.tau_from) +
             " " + fmt(e.tau_to) + " " + std::to_string(e.left_face) + " " +
             std::to_string(e.right_face) + "\n";
    }
    for (std::size_t i = 0; i < cx.face_count(); ++i) {
      const FaceInfo& f = cx.faces()[i];
      out += "face " + std::to_string(i) + " label " + std::to_string(f.label) + " area " +
             fmt(f.area) + (f.unbounded ? " unbounded" : "") + "\n";
    }
  }
  return out;
}

std::string paving_to_svg(const Paving& paving, const std::vector<const Cycle*>& contours) {
  const Box2& roi = paving.roi;
  const double w = roi.width_x(), h = roi.width_y();
  const double scale = 800.0 / std::max(w, h);
  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.6f %.6f\">\n",
                w * scale, h * scale, w * scale, h * scale);
  svg += buf;
  const auto X = [&](double x) { return (x - roi.x.lo) * scale; };
  const auto Y = [&](double y) { return (roi.y.hi - y) * scale; };
  for (const PavingLeaf& leaf : paving.leaves) {
    std::snprintf(buf, sizeof(buf),
                  "<rect x=\"%.4f\" y=\"%.4f\" width=\"%.4f\" height=\"%.4f\" "
                  "fill=\"%s\" stroke=\"none\"/>\n",
                  X(leaf.box.x.lo), Y(leaf.box.y.hi), leaf.box.width_x() * scale,
                  leaf.box.width_y() * scale, fill_of(leaf.value));
    svg += buf;
  }
  for (const Cycle* c : contours) {
    svg += "<polygon points=\"";
    for (const Point2& p : c->points()) {
      std::snprintf(buf, sizeof(buf), "%.4f,%.4f ", X(p.x), Y(p.y));
      svg += buf;
    }
    svg += "\" fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace sweepcov
