// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

struct PieceBuilder {
  std::vector<Point2> pts;
  std::vector<Vec2> tans;
  std::vector<CycleSource> tags;
  std::vector<double> gens;  // generating parameter (time or lateral offset)

  void add(const Point2& p, const Vec2& t, CycleSource tag, double gen) {
    pts.push_back(p);
    tans.push_back(t);
    tags.push_back(tag);
    gens.push_back(gen);
  }
};

using CurveFn = std::function<Point2(double)>;
using TangentFn = std::function<Vec2(double)>;

// Emits points of g over (a, b] so consecutive points are at most `sampling`
// apart and the midpoint never strays more than sampling/8 off the chord.
// The caller emits g(a) itself.
void refine_curve(const CurveFn& g, const TangentFn& gt, CycleSource tag, double a,
                  const Point2& pa, double b, const Point2& pb, double sampling,
                  int depth, PieceBuilder& out) {
  const double m = 0.5 * (a + b);
  const Point2 pm = g(m);
  const bool flat = distance(pa, pb) <= sampling &&
                    std::sqrt(dist_sq_point_segment(pm, {pa, pb})) <= sampling / 8.0 &&
                    distance(pa, pm) <= sampling && distance(pm, pb) <= sampling;
  if (flat || depth >= 28) {
    out.add(pb, gt(b), tag, b);
    return;
  }
  refine_curve(g, gt, tag, a, pa, m, pm, sampling, depth + 1, out);
  refine_curve(g, gt, tag, m, pm, b, pb, sampling, depth + 1, out);
}

// Samples g over [a, b] seeded at `seeds` (ascending, including both ends).
void emit_curve(const CurveFn& g, const TangentFn& gt, CycleSource tag,
                const std::vector<double>& seeds, double sampling, PieceBuilder& out) {
  out.add(g(seeds.front()), gt(seeds.front()), tag, seeds.front());
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
    refine_curve(g, gt, tag, seeds[i], g(seeds[i]), seeds[i + 1], g(seeds[i + 1]),
                 sampling, 0, out);
  }
}

std::vector<double> time_seeds(const PoseTrajectory& traj, double t0, double t1) {
  std::vector<double> seeds{t0};
  for (const PoseSample& s : traj.samples()) {
    if (s.t > t0 && s.t < t1) seeds.push_back(s.t);
  }
  seeds.push_back(t1);
  return seeds;
}

// Image of the horizontal waterfall edge u = const, traversed t0 -> t1.
void emit_time_edge(const PoseTrajectory& traj, const SensorConfig& cfg, double u,
                    double t0, double t1, CycleSource tag, double sampling,
                    PieceBuilder& out) {
  const bool fwd = t1 >= t0;
  const CurveFn g = [&, u](double t) { return sweep_point(traj.state_at(t), u, cfg); };
  const TangentFn gt = [&, u, fwd](double t) {
    const Vec2 v = sweep_velocity(traj.state_at(t), u, cfg);
    return fwd ? v : -v;
  };
  std::vector<double> seeds = time_seeds(traj, std::min(t0, t1), std::max(t0, t1));
  if (!fwd) std::reverse(seeds.begin(), seeds.end());
  emit_curve(g, gt, tag, seeds, sampling, out);
}

// Image of the vertical waterfall edge t = const (a beam), u0 -> u1.
void emit_beam_edge(const PoseTrajectory& traj, const SensorConfig& cfg, double t,
                    double u0, double u1, CycleSource tag, double sampling,
                    PieceBuilder& out) {
  const TrajectoryState st = traj.state_at(t);
  const Vec2 n = st.left_normal() * cfg.lateral_sign();
  const Vec2 dir = (u1 >= u0 ? n : -n);
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(u1 - u0) / sampling)));
  for (int i = 0; i <= steps; ++i) {
    const double u = u0 + (u1 - u0) * (static_cast<double>(i) / steps);
    out.add(sweep_point(st, u, cfg), dir, tag, u);
  }
}

Cycle finish(PieceBuilder&& b, double tol) {
  if (b.pts.size() < 3) throw AssumptionError("open contour");
  const double gap = distance(b.pts.back(), b.pts.front());
  if (gap > std::max(100.0 * tol, 1e-7))
    throw AssumptionError("open contour");
  return Cycle::from_points(std::move(b.pts), std::move(b.tans), std::move(b.tags),
                            std::move(b.gens));
}

}  // namespace

double contour_time_inset(const PoseTrajectory& traj, const SensorConfig& cfg, double tol) {
  const double ang_tol = tol / std::max(cfg.range_L, 1e-6);
  if (!traj.is_closed(tol, ang_tol)) return 0.0;
  const double v_end =
      std::max({Vec2{traj.samples().front().vel.x, traj.samples().front().vel.y}.norm(),
                Vec2{traj.samples().back().vel.x, traj.samples().back().vel.y}.norm(), 1e-3});
  return std::min(tol / v_end, 1e-3 * traj.duration());
}

Cycle build_contour(const PoseTrajectory& traj, const SensorConfig& cfg,
                    const ContourOptions& opts) {
  if (traj.samples().size() < 2) throw AssumptionError("trajectory too short");
  const double inset = contour_time_inset(traj, cfg, opts.tol);
  const double t0 = traj.t_start() + inset;
  const double t1 = traj.t_end() - inset;

  PieceBuilder b;
  const CycleSource near_tag =
      cfg.u_min() == 0.0 ? CycleSource::path : CycleSource::far_edge;
  emit_time_edge(traj, cfg, cfg.u_min(), t0, t1, near_tag, opts.sampling, b);
  emit_beam_edge(traj, cfg, t1, cfg.u_min(), cfg.u_max(), CycleSource::cap_end,
                 opts.sampling, b);
  emit_time_edge(traj, cfg, cfg.u_max(), t1, t0, CycleSource::far_edge, opts.sampling, b);
  emit_beam_edge(traj, cfg, t0, cfg.u_max(), cfg.u_min(), CycleSource::cap_start,
                 opts.sampling, b);
  return finish(std::move(b), opts.tol);
}

namespace detail {

namespace {

struct DirectedRun {
  double fixed;   // the constant coordinate
  double lo, hi;  // span along the moving coordinate
  int dir;        // +1: lo -> hi, -1: hi -> lo
};

// Net directed runs along one family of grid lines. edges: (fixed, from, to).
std::vector<DirectedRun> net_runs(std::vector<std::array<double, 3>>& edges) {
  std::vector<DirectedRun> runs;
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return a[0] < b[0];
  });
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    while (j < edges.size() && edges[j][0] == edges[i][0]) ++j;
    // Breakpoint sweep over [i, j).
    std::vector<double> cuts;
    for (std::size_t k = i; k < j; ++k) {
      cuts.push_back(edges[k][1]);
      cuts.push_back(edges[k][2]);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      int net = 0;
      const double a = cuts[c], bb = cuts[c + 1];
      for (std::size_t k = i; k < j; ++k) {
        const double lo = std::min(edges[k][1], edges[k][2]);
        const double hi = std::max(edges[k][1], edges[k][2]);
        if (lo <= a && bb <= hi) net += (edges[k][2] > edges[k][1]) ? 1 : -1;
      }
      if (net != 0) runs.push_back({edges[i][0], a, bb, net > 0 ? 1 : -1});
    }
    i = j;
  }
  return runs;
}

}  // namespace

std::vector<std::vector<Point2>> rectilinear_boundary(
    const std::vector<WaterfallRect>& cells) {
  // Directed cell edges, CCW in the (t, u) plane: interior on the left.
  std::vector<std::array<double, 3>> horiz;  // fixed u, runs along t
  std::vector<std::array<double, 3>> vert;   // fixed t, runs along u
  for (const WaterfallRect& c : cells) {
    horiz.push_back({c.u.lo, c.t.lo, c.t.hi});
    horiz.push_back({c.u.hi, c.t.hi, c.t.lo});
    vert.push_back({c.t.hi, c.u.lo, c.u.hi});
    vert.push_back({c.t.lo, c.u.hi, c.u.lo});
  }

  // Directed boundary segments (t, u) -> (t, u).
  struct BSeg {
    Point2 a, b;  // x = t, y = u
    bool used = false;
    Vec2 dir() const { return b - a; }
  };
  std::vector<BSeg> segs;
  for (const DirectedRun& r : net_runs(horiz)) {
    if (r.dir > 0)
      segs.push_back({{r.lo, r.fixed}, {r.hi, r.fixed}});
    else
      segs.push_back({{r.hi, r.fixed}, {r.lo, r.fixed}});
  }
  for (const DirectedRun& r : net_runs(vert)) {
    if (r.dir > 0)
      segs.push_back({{r.fixed, r.lo}, {r.fixed, r.hi}});
    else
      segs.push_back({{r.fixed, r.hi}, {r.fixed, r.lo}});
  }

  // Outgoing map keyed by exact start coordinates.
  std::map<std::pair<double, double>, std::vector<std::size_t>> outgoing;
  for (std::size_t k = 0; k < segs.size(); ++k)
    outgoing[{segs[k].a.x, segs[k].a.y}].push_back(k);

  auto angle_of = [](const Vec2& d) { return std::atan2(d.y, d.x); };

  std::vector<std::vector<Point2>> loops;
  for (std::size_t start = 0; start < segs.size(); ++start) {
    if (segs[start].used) continue;
    std::vector<Point2> loop;
    std::size_t cur = start;
    while (!segs[cur].used) {
      segs[cur].used = true;
      loop.push_back(segs[cur].a);
      const auto it = outgoing.find({segs[cur].b.x, segs[cur].b.y});
      if (it == outgoing.end()) throw AssumptionError("waterfall boundary stitch failure");
      // Leftmost turn keeps the interior on the left at corner contacts.
      const double in_ang = angle_of(segs[cur].dir());
      std::size_t best = SIZE_MAX;
      double best_turn = -10.0;
      for (std::size_t cand : it->second) {
        if (segs[cand].used && cand != start) continue;
        double turn = angle_of(segs[cand].dir()) - in_ang;
        while (turn <= -std::numbers::pi) turn += 2.0 * std::numbers::pi;
        while (turn > std::numbers::pi) turn -= 2.0 * std::numbers::pi;
        if (std::abs(std::abs(turn) - std::numbers::pi) < 1e-12) continue;  // no U-turns
        if (turn > best_turn) {
          best_turn = turn;
          best = cand;
        }
      }
      if (best == SIZE_MAX) break;  // loop closed back to start
      cur = best;
      if (cur == start) break;
    }
    if (loop.size() >= 4) loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace detail

SignedContours build_signed_contours(const PoseTrajectory& traj, const SensorConfig& cfg,
                                     const SignedRegionDecomposition& dec,
                                     const ContourOptions& opts) {
  SignedContours out;
  if (dec.all_positive()) {
    out.gamma_plus.push_back(build_contour(traj, cfg, opts));
    return out;
  }
  if (dec.all_negative()) {
    out.gamma_minus.push_back(build_contour(traj, cfg, opts).reversed());
    return out;
  }

  const double du = dec.domain.u.width();
  const double dt = dec.domain.t.width();
  const double coord_eps = 1e-9 * std::max(du, dt);

  auto map_loops = [&](std::vector<WaterfallRect> cells, bool negate) {
    std::vector<Cycle> cycles;
    for (auto& loop : detail::rectilinear_boundary(cells)) {
      PieceBuilder b;
      const std::size_t n = loop.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = loop[i];             // (t, u)
        const Point2 c = loop[(i + 1) % n];  // (t, u)
        if (std::abs(a.y - c.y) <= coord_eps) {
          // Constant-u edge.
          CycleSource tag = CycleSource::det_boundary;
          if (std::abs(a.y - dec.domain.u.lo) <= coord_eps)
            tag = cfg.u_min() == 0.0 ? CycleSource::path : CycleSource::far_edge;
          else if (std::abs(a.y - dec.domain.u.hi) <= coord_eps)
            tag = CycleSource::far_edge;
          emit_time_edge(traj, cfg, a.y, a.x, c.x, tag, opts.sampling, b);
        } else {
          // Constant-t edge (beam).
          CycleSource tag = CycleSource::det_boundary;
          if (std::abs(a.x - dec.domain.t.lo) <= coord_eps)
            tag = CycleSource::cap_start;
          else if (std::abs(a.x - dec.domain.t.hi) <= coord_eps)
            tag = CycleSource::cap_end;
          emit_beam_edge(traj, cfg, a.x, a.y, c.y, tag, opts.sampling, b);
        }
        // Pieces share endpoints; from_points drops the duplicates.
      }
      Cycle cyc = finish(std::move(b), opts.tol);
      cycles.push_back(negate ? cyc.reversed() : std::move(cyc));
    }
    return cycles;
  };

  std::vector<WaterfallRect> plus_cells = dec.s_plus;
  plus_cells.insert(plus_cells.end(), dec.unresolved.begin(), dec.unresolved.end());
  std::vector<WaterfallRect> minus_cells = dec.s_minus;
  minus_cells.insert(minus_cells.end(), dec.unresolved.begin(), dec.unresolved.end());

  if (!plus_cells.empty()) out.gamma_plus = map_loops(std::move(plus_cells), false);
  if (!minus_cells.empty()) out.gamma_minus = map_loops(std::move(minus_cells), true);
  return out;
}

}  // namespace sweepcov
