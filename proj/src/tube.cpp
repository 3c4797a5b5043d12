// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/tube.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>

#include "sweepcov/contour.hpp"
#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

double lerp(double a, double b, double s) { return a + (b - a) * s; }

Box2 lerp_box(const Box2& a, const Box2& b, double s) {
  return {{lerp(a.x.lo, b.x.lo, s), lerp(a.x.hi, b.x.hi, s)},
          {lerp(a.y.lo, b.y.lo, s), lerp(a.y.hi, b.y.hi, s)}};
}

double half_diag(const Box2& b) {
  return 0.5 * std::hypot(b.width_x(), b.width_y());
}

// Angular cone [lo, hi] of the directions of a box not containing the
// origin, unwrapped near `near`.
Interval direction_cone(const Box2& v, double near) {
  if (v.contains(Point2{0.0, 0.0}))
    throw AssumptionError("heading indeterminate: velocity box contains zero");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const double base = std::atan2(v.corners()[0].y, v.corners()[0].x);
  for (const Point2& c : v.corners()) {
    double a = std::atan2(c.y, c.x);
    while (a < base - std::numbers::pi) a += 2.0 * std::numbers::pi;
    while (a > base + std::numbers::pi) a -= 2.0 * std::numbers::pi;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  double mid = 0.5 * (lo + hi);
  double shift = 0.0;
  while (mid + shift < near - std::numbers::pi) shift += 2.0 * std::numbers::pi;
  while (mid + shift > near + std::numbers::pi) shift -= 2.0 * std::numbers::pi;
  return {lo + shift, hi + shift};
}

double seg_box_dist_sq(const Segment2& s, const Box2& b) {
  if (segment_intersects_box(s, b)) return 0.0;
  double d = std::min(dist_sq_point_box(s.a, b), dist_sq_point_box(s.b, b));
  for (const Point2& c : b.corners()) d = std::min(d, dist_sq_point_segment(c, s));
  return d;
}

}  // namespace

Tube::Tube(std::vector<TubeRow> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw InputError("too short: need at least 2 tube rows");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].pos.is_empty() || rows_[i].vel.is_empty())
      throw InputError("invalid value: empty tube box at row " + std::to_string(i));
    if (i > 0 && !(rows_[i].t > rows_[i - 1].t))
      throw InputError("time order violated at tube row " + std::to_string(i));
  }
}

Tube Tube::from_trajectory(const PoseTrajectory& traj, double pos_radius,
                           double vel_radius) {
  std::vector<TubeRow> rows;
  for (const PoseSample& s : traj.samples()) {
    TubeRow row;
    row.t = s.t;
    row.pos = Box2::from_corners(s.pose.position(), s.pose.position()).inflated(pos_radius);
    const Point2 v{s.vel.x, s.vel.y};
    row.vel = Box2::from_corners(v, v).inflated(vel_radius);
    rows.push_back(row);
  }
  return Tube(std::move(rows));
}

TubeRow Tube::row_at(double t) const {
  t = std::clamp(t, t_start(), t_end());
  const auto it = std::upper_bound(rows_.begin(), rows_.end(), t,
                                   [](double v, const TubeRow& r) { return v < r.t; });
  const std::size_t hi = std::clamp<std::size_t>(
      static_cast<std::size_t>(it - rows_.begin()), 1, rows_.size() - 1);
  const TubeRow& a = rows_[hi - 1];
  const TubeRow& b = rows_[hi];
  const double s = (t - a.t) / (b.t - a.t);
  return {t, lerp_box(a.pos, b.pos, s), lerp_box(a.vel, b.vel, s)};
}

Tube Tube::time_slice(double t0, double t1) const {
  if (!(t0 < t1)) throw InputError("invalid tube slice times");
  std::vector<TubeRow> rows;
  rows.push_back(row_at(t0));
  for (const TubeRow& r : rows_) {
    if (r.t > rows.back().t && r.t < t1) rows.push_back(r);
  }
  rows.push_back(row_at(t1));
  return Tube(std::move(rows));
}

PoseTrajectory Tube::center_trajectory() const {
  std::vector<PoseSample> samples;
  double prev_psi = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const TubeRow& r = rows_[i];
    const Point2 p = r.pos.center();
    const Point2 v = r.vel.center();
    if (r.vel.contains(Point2{0.0, 0.0}) && v.norm() == 0.0)
      throw AssumptionError("heading indeterminate: velocity box contains zero");
    double psi = std::atan2(v.y, v.x);
    if (i > 0) {
      while (psi < prev_psi - std::numbers::pi) psi += 2.0 * std::numbers::pi;
      while (psi > prev_psi + std::numbers::pi) psi -= 2.0 * std::numbers::pi;
    }
    prev_psi = psi;
    PoseSample s;
    s.t = r.t;
    s.pose = {p.x, p.y, psi};
    s.vel = {v.x, v.y, 0.0};
    samples.push_back(s);
  }
  // Heading rate and accelerations by central differences.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = std::min(i + 1, samples.size() - 1);
    const double dt = samples[b].t - samples[a].t;
    samples[i].vel.z = (samples[b].pose.psi - samples[a].pose.psi) / dt;
    samples[i].acc = {(samples[b].vel.x - samples[a].vel.x) / dt,
                      (samples[b].vel.y - samples[a].vel.y) / dt, 0.0};
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = std::min(i + 1, samples.size() - 1);
    const double dt = samples[b].t - samples[a].t;
    samples[i].acc.z = (samples[b].vel.z - samples[a].vel.z) / dt;
  }
  return PoseTrajectory(std::move(samples));
}

bool ContourTube::penumbra_contains(const Point2& p) const {
  const kernels::NearestSeg near = kernels::nearest_segment(nominal.soa(), p);
  if (near.dist_sq > (max_pad + tol) * (max_pad + tol)) return false;
  for (const std::uint32_t k : reachable_segments(
           Box2::from_corners(p, p))) {
    if (dist_sq_point_segment(p, nominal.segment(k)) <= seg_pad(k) * seg_pad(k))
      return true;
  }
  return false;
}

bool ContourTube::penumbra_meets_box(const Box2& b) const {
  return !reachable_segments(b).empty();
}

std::vector<std::uint32_t> ContourTube::reachable_segments(const Box2& b) const {
  std::vector<std::uint32_t> hits;
  kernels::collect_segments_intersecting_box(nominal.soa(), b.inflated(max_pad + tol), hits);
  std::vector<std::uint32_t> out;
  for (const std::uint32_t k : hits) {
    if (seg_box_dist_sq(nominal.segment(k), b) <= seg_pad(k) * seg_pad(k))
      out.push_back(k);
  }
  return out;
}

ContourTube build_contour_tube(const Tube& tube, const SensorConfig& cfg,
                               const PipelineOptions& opts) {
  if (cfg.side == SensorSide::both)
    throw AssumptionError("uncertain pipeline supports one-sided sensors only");
  ContourTube ct;
  ct.tol = opts.tol;
  const PoseTrajectory nominal_traj = tube.center_trajectory();
  ct.nominal = build_contour(nominal_traj, cfg, {opts.sampling, opts.tol});

  // Per-row heading cones plus a heading-rate magnitude bound from the
  // nominal trajectory (the tube has no acceleration enclosures; the bound
  // feeds only the far-edge direction margin).
  const auto& rows = tube.rows();
  std::vector<Interval> psi_cone(rows.size());
  double prev_mid = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    psi_cone[i] = direction_cone(rows[i].vel, i == 0 ? 0.0 : prev_mid);
    prev_mid = psi_cone[i].mid();
  }
  std::vector<double> psidot_bound(rows.size(), 0.0);
  std::vector<double> speed_min(rows.size(), 1e-6);
  {
    const auto samples = nominal_traj.samples();
    std::size_t j = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double w = 0.0;
      while (j + 1 < samples.size() && samples[j + 1].t < rows[i].t) ++j;
      for (std::size_t k = (j > 2 ? j - 2 : 0); k <= std::min(j + 3, samples.size() - 1);
           ++k)
        w = std::max(w, std::abs(samples[k].vel.z));
      psidot_bound[i] = 1.5 * w + 1e-6;
      speed_min[i] = std::max(1e-6, std::sqrt(dist_sq_point_box({0.0, 0.0}, rows[i].vel)));
    }
  }

  const auto row_index = [&](double t) {
    const auto it = std::upper_bound(rows.begin(), rows.end(), t,
                                     [](double v, const TubeRow& r) { return v < r.t; });
    const std::size_t hi = std::clamp<std::size_t>(
        static_cast<std::size_t>(it - rows.begin()), 1, rows.size() - 1);
    return std::pair<std::size_t, double>{hi - 1, (t - rows[hi - 1].t) /
                                                      (rows[hi].t - rows[hi - 1].t)};
  };

  // Node pads and tangent cones from the recorded generating parameters:
  // the contour point at time t and lateral offset u deviates from the
  // nominal by at most the position box radius plus |u| times the heading
  // cone width.
  const auto& srcs = ct.nominal.sources();
  const auto& gens = ct.nominal.gens();
  const std::size_t n = ct.nominal.size();
  ct.node_pad.resize(n);
  ct.tangent_cone.resize(n);
  ct.node_time.assign(n, std::numeric_limits<double>::quiet_NaN());

  const double t0c = nominal_traj.t_start() +
                     contour_time_inset(nominal_traj, cfg, opts.tol);
  const double t1c = nominal_traj.t_end() -
                     contour_time_inset(nominal_traj, cfg, opts.tol);

  const double s_sign = cfg.lateral_sign();
  for (std::size_t i = 0; i < n; ++i) {
    double t = 0.0;
    double u = 0.0;
    const CycleSource tag = srcs[i];
    switch (tag) {
      case CycleSource::path:
        u = cfg.u_min();
        t = gens[i];
        break;
      case CycleSource::far_edge:
        u = cfg.u_max();
        t = gens[i];
        break;
      case CycleSource::cap_end:
        t = t1c;
        u = gens[i];
        break;
      case CycleSource::cap_start:
        t = t0c;
        u = gens[i];
        break;
      default:
        t = gens[i];
        u = cfg.u_max();
        break;
    }
    const auto [ri, frac] = row_index(t);
    const Box2 pos = lerp_box(rows[ri].pos, rows[ri + 1].pos, frac);
    const Interval cone = hull(psi_cone[ri], psi_cone[ri + 1]);
    const double rdir = 0.5 * cone.width();
    ct.node_pad[i] = half_diag(pos) + std::abs(u) * rdir;
    ct.node_time[i] = t;

    // Tangent direction cone (angles), then its (cos, sin) box. The
    // far-edge direction deviates from the heading by at most
    // asin(|u| |psidot| / |v|).
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    Interval ang;
    switch (tag) {
      case CycleSource::cap_end:
        ang = cone + Interval(s_sign > 0.0 ? kHalfPi : -kHalfPi);
        break;
      case CycleSource::cap_start:
        ang = cone + Interval(s_sign > 0.0 ? -kHalfPi : kHalfPi);
        break;
      case CycleSource::far_edge: {
        const double wmax = std::max(psidot_bound[ri], psidot_bound[ri + 1]);
        const double vmin = std::min(speed_min[ri], speed_min[ri + 1]);
        const double ratio = std::min(1.0, std::abs(u) * wmax / vmin);
        ang = inflated(cone, std::asin(ratio)) + Interval(std::numbers::pi);
        break;
      }
      default:  // path
        ang = cone;
        break;
    }
    ct.tangent_cone[i] = {cos_enclosure(ang), sin_enclosure(ang)};
  }
  ct.max_pad = 0.0;
  for (const double p : ct.node_pad) ct.max_pad = std::max(ct.max_pad, p);
  return ct;
}

std::vector<UncertainVertex> find_uncertain_intersections(const ContourTube& ct,
                                                          const Tube& tube,
                                                          const PipelineOptions& opts) {
  (void)tube;
  const Cycle& nom = ct.nominal;
  const std::size_t n = nom.size();
  const double total_len = nom.length();
  double max_seg = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_seg = std::max(max_seg, nom.segment(i).length());

  // Overlapping non-adjacent segment pairs of the padded chain.
  struct PairHit {
    std::uint32_t i, j;
  };
  std::vector<PairHit> pairs;
  for (std::uint32_t i = 0; i < n; ++i) {
    const Segment2 si = nom.segment(i);
    const double pad_i = ct.seg_pad(i);
    const Box2 probe = Box2::from_corners(si.a, si.b).inflated(pad_i + ct.max_pad + ct.tol);
    std::vector<std::uint32_t> cand;
    kernels::collect_segments_intersecting_box(nom.soa(), probe, cand);
    for (const std::uint32_t j : cand) {
      if (j <= i) continue;
      const double pad = pad_i + ct.seg_pad(j);
      // Same-branch guard: skip chain-adjacent windows.
      const double gap = std::min(std::abs(nom.taus()[j] - nom.taus()[i]),
                                  1.0 - std::abs(nom.taus()[j] - nom.taus()[i]));
      if (gap * total_len <= 4.0 * pad + 4.0 * max_seg) continue;
      const Segment2 sj = nom.segment(j);
      double d = dist_sq_point_segment(sj.a, si);
      d = std::min(d, dist_sq_point_segment(sj.b, si));
      d = std::min(d, dist_sq_point_segment(si.a, sj));
      d = std::min(d, dist_sq_point_segment(si.b, sj));
      const SegHit hit = segment_intersect(si, sj, ct.tol);
      if (hit.kind != SegRelation::none) d = 0.0;
      if (d <= pad * pad) pairs.push_back({i, j});
    }
  }
  if (pairs.empty()) return {};

  // Cluster pairs into crossing windows.
  std::vector<std::size_t> parent(pairs.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  const auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto near_idx = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint32_t d = a > b ? a - b : b - a;
    return std::min<std::uint32_t>(d, static_cast<std::uint32_t>(n) - d) <= 3;
  };
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (near_idx(pairs[a].i, pairs[b].i) && near_idx(pairs[a].j, pairs[b].j))
        parent[root(a)] = root(b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t k = 0; k < pairs.size(); ++k) clusters[root(k)].push_back(k);

  std::vector<UncertainVertex> out;
  for (const auto& [r, members] : clusters) {
    (void)r;
    UncertainVertex v;
    v.tau_a0 = 2.0;
    v.tau_a1 = -1.0;
    v.tau_b0 = 2.0;
    v.tau_b1 = -1.0;
    Box2 region = Box2::empty();
    Box2 cone_a = Box2::empty();
    Box2 cone_b = Box2::empty();
    double t_lo = std::numeric_limits<double>::infinity();
    double t_hi = -std::numeric_limits<double>::infinity();
    for (const std::size_t k : members) {
      const std::uint32_t i = pairs[k].i;
      const std::uint32_t j = pairs[k].j;
      v.tau_a0 = std::min(v.tau_a0, nom.taus()[i]);
      v.tau_a1 = std::max(v.tau_a1, nom.tau_of(i, 1.0));
      v.tau_b0 = std::min(v.tau_b0, nom.taus()[j]);
      v.tau_b1 = std::max(v.tau_b1, nom.tau_of(j, 1.0));
      const Segment2 si = nom.segment(i);
      const Segment2 sj = nom.segment(j);
      region = hull(region, Box2::from_corners(si.a, si.b).inflated(ct.seg_pad(i)));
      region = hull(region, Box2::from_corners(sj.a, sj.b).inflated(ct.seg_pad(j)));
      cone_a = hull(hull(cone_a, ct.tangent_cone[i]), ct.tangent_cone[(i + 1) % n]);
      cone_b = hull(hull(cone_b, ct.tangent_cone[j]), ct.tangent_cone[(j + 1) % n]);
      for (const std::uint32_t s : {i, j}) {
        if (!std::isnan(ct.node_time[s])) {
          t_lo = std::min(t_lo, ct.node_time[s]);
          t_hi = std::max(t_hi, ct.node_time[s]);
        }
      }
    }
    v.region = region;
    v.cone_a = cone_a;
    v.cone_b = cone_b;
    const Interval cross = Interval(cone_a.x.lo, cone_a.x.hi) * Interval(cone_b.y.lo, cone_b.y.hi) -
                           Interval(cone_a.y.lo, cone_a.y.hi) * Interval(cone_b.x.lo, cone_b.x.hi);
    if (cross.contains_zero()) {
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "colinear uncertain crossing in time window [%.3f, %.3f]",
                    t_lo, t_hi);
      throw AssumptionError(buf);
    }
    v.update = cross.lo > 0.0 ? 1 : -1;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const UncertainVertex& a, const UncertainVertex& b) {
    return std::make_pair(a.tau_a0, a.tau_b0) < std::make_pair(b.tau_a0, b.tau_b0);
  });
  (void)opts;
  return out;
}

ThickField ThickField::build(ContourTube ct, const std::vector<UncertainVertex>& vertices,
                             const PipelineOptions& opts) {
  ThickField f;
  f.opts_ = opts;
  f.ct_ = std::move(ct);
  const IntersectOptions iopts{opts.tol, opts.transversality_min};
  const std::vector<SelfIntersection> xs = find_self_intersections(f.ct_.nominal, iopts);

  // Every nominal crossing must be covered by a validated uncertain vertex
  // with a matching update sign.
  for (const SelfIntersection& x : xs) {
    bool matched = false;
    for (const UncertainVertex& v : vertices) {
      if (v.region.contains(x.point)) {
        matched = v.update == x.update;
        break;
      }
    }
    if (!matched && !vertices.empty())
      throw AssumptionError("uncertain crossing inconsistent with nominal contour");
  }

  f.cx_ = CellComplex::build(f.ct_.nominal, xs, opts.tol);

  // Map each nominal segment to the complex edge containing its midpoint.
  const std::size_t n = f.ct_.nominal.size();
  f.seg_edge_.resize(n);
  const auto& edges = f.cx_.edges();
  for (std::size_t k = 0; k < n; ++k) {
    const double tau = f.ct_.nominal.tau_of(k, 0.5);
    std::uint32_t found = 0;
    if (edges.size() == 1) {
      found = 0;
    } else {
      found = kNoVertex;
      for (std::uint32_t e = 0; e < edges.size(); ++e) {
        const double a = edges[e].tau_from;
        const double b = edges[e].tau_to;
        const bool inside = a < b ? (tau >= a && tau <= b) : (tau >= a || tau <= b);
        if (inside) {
          found = e;
          break;
        }
      }
      if (found == kNoVertex) throw AssumptionError("arrangement failure: tau lookup");
    }
    f.seg_edge_[k] = found;
  }
  return f;
}

std::pair<int, int> ThickField::flank_labels(std::uint32_t nominal_seg) const {
  const ArrangementEdge& e = cx_.edges()[seg_edge_[nominal_seg]];
  const int l = cx_.faces()[e.left_face].label;
  const int r = cx_.faces()[e.right_face].label;
  return {std::min(l, r), std::max(l, r)};
}

CoverageValue ThickField::value_at(const Point2& p) const {
  const auto reach = ct_.reachable_segments(Box2::from_corners(p, p));
  bool in_penumbra = false;
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const std::uint32_t k : reach) {
    if (dist_sq_point_segment(p, ct_.nominal.segment(k)) <=
        ct_.seg_pad(k) * ct_.seg_pad(k)) {
      in_penumbra = true;
      const auto [l, h] = flank_labels(k);
      lo = std::min(lo, l);
      hi = std::max(hi, h);
    }
  }
  const int at = cx_.extended_winding(p);
  if (!in_penumbra) return {std::max(at, 0), std::max(at, 0)};
  lo = std::min(lo, at);
  hi = std::max(hi, at);
  return {std::max(lo, 0), std::max(hi, 0)};
}

CoverageValue ThickField::box_value(const Box2& b) const {
  const auto reach = ct_.reachable_segments(b);
  if (reach.empty()) {
    const int v = std::max(cx_.extended_winding(b.center()), 0);
    return {v, v};
  }
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const std::uint32_t k : reach) {
    const auto [l, h] = flank_labels(k);
    lo = std::min(lo, l);
    hi = std::max(hi, h);
  }
  // Faces meeting the box beyond the penumbra: flanks of edges crossing the
  // box, or the single containing face.
  const auto [hit, bounds] = cx_.labels_near_box(b.inflated(ct_.tol));
  if (hit) {
    lo = std::min(lo, bounds.first);
    hi = std::max(hi, bounds.second);
  } else {
    const int c = cx_.extended_winding(b.center());
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  return {std::max(lo, 0), std::max(hi, 0)};
}

std::vector<ThickWindingSet> thick_winding_sets(const ThickField& field) {
  std::vector<ThickWindingSet> sets;
  for (int level = 1; level <= std::max(field.max_level(), 0); ++level)
    sets.push_back({level, &field});
  return sets;
}

CoverageValue thick_characteristic(const ThickWindingSet& tw, const Box2& b) {
  const CoverageValue v = tw.field->box_value(b);
  if (v.lo >= tw.level) return {1, 1};
  if (v.hi < tw.level) return {0, 0};
  return {0, 1};
}

CoverageValue uncertain_coverage(const ThickField& field, const Point2& p) {
  return field.value_at(p);
}

CoverageValue uncertain_coverage(const ThickField& field, const Box2& b) {
  return field.box_value(b);
}

namespace {

void classify_thick_node(const ThickField& field, const Box2& box, double epsilon,
                         std::vector<PavingLeaf>& leaves) {
  if (!field.contour_tube().penumbra_meets_box(box)) {
    const int v = std::max(field.complex().extended_winding(box.center()), 0);
    leaves.push_back({box, {v, v}});
    return;
  }
  if (box.max_side() <= epsilon) {
    leaves.push_back({box, field.box_value(box)});
    return;
  }
  const auto [first, second] = box_bisect(box);
  classify_thick_node(field, first, epsilon, leaves);
  classify_thick_node(field, second, epsilon, leaves);
}

}  // namespace

Paving classify_roi(const ThickField& field, const Box2& roi, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (roi.is_empty()) throw std::invalid_argument("roi must be nonempty");
  Paving paving;
  paving.roi = roi;
  paving.epsilon = epsilon;
  classify_thick_node(field, roi, epsilon, paving.leaves);
  return paving;
}

}  // namespace sweepcov
