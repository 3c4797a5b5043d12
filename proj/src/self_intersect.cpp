// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/self_intersect.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

double cyc_dist(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

struct RawHit {
  double tau1, tau2;  // tau1 < tau2 by index order
  Point2 point;
  bool proper;
};

struct Cluster {
  std::vector<std::size_t> members;
};

// Uniform grid over segment bounding boxes; candidate pairs share a cell.
std::vector<std::pair<std::uint32_t, std::uint32_t>> candidate_pairs(const Cycle& c,
                                                                     double tol) {
  const std::size_t n = c.size();
  double max_len = 1e-12;
  Box2 bbox = Box2::empty();
  for (std::size_t i = 0; i < n; ++i) {
    max_len = std::max(max_len, c.segment(i).length());
    bbox = hull(bbox, c.point(i));
  }
  const double h = 1.5 * max_len + 4.0 * tol;

  const auto key = [&](long ix, long iy) {
    return (static_cast<long long>(ix) << 32) ^ (iy & 0xffffffffLL);
  };
  std::unordered_map<long long, std::vector<std::uint32_t>> grid;
  grid.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Segment2 s = c.segment(i);
    const Box2 sb = Box2::from_corners(s.a, s.b).inflated(tol);
    const long ix0 = static_cast<long>(std::floor((sb.x.lo - bbox.x.lo) / h));
    const long ix1 = static_cast<long>(std::floor((sb.x.hi - bbox.x.lo) / h));
    const long iy0 = static_cast<long>(std::floor((sb.y.lo - bbox.y.lo) / h));
    const long iy1 = static_cast<long>(std::floor((sb.y.hi - bbox.y.lo) / h));
    for (long ix = ix0; ix <= ix1; ++ix)
      for (long iy = iy0; iy <= iy1; ++iy)
        grid[key(ix, iy)].push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& [cell, segs] : grid) {
    (void)cell;
    for (std::size_t a = 0; a < segs.size(); ++a) {
      for (std::size_t b = a + 1; b < segs.size(); ++b) {
        std::uint32_t i = segs[a], j = segs[b];
        if (i > j) std::swap(i, j);
        // Skip adjacent segments (shared endpoint), including the wrap.
        if (j - i <= 1 || (i == 0 && j == n - 1)) continue;
        pairs.emplace_back(i, j);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

struct FindResult {
  std::vector<SelfIntersection> xs;
  std::vector<AssumptionReport::Item> violations;
};

FindResult find_impl(const Cycle& c, const IntersectOptions& opts, bool strict) {
  FindResult res;
  const double tol = opts.tol;

  std::vector<RawHit> raw;
  for (const auto& [i, j] : candidate_pairs(c, tol)) {
    const SegHit hit = segment_intersect(c.segment(i), c.segment(j), tol);
    if (hit.kind == SegRelation::none) continue;
    raw.push_back({c.tau_of(i, hit.t1), c.tau_of(j, hit.t2), hit.point,
                   hit.kind == SegRelation::proper});
  }
  if (raw.empty()) return res;

  // Cluster raw hits that represent one analytic crossing. Touch reports can
  // sit up to ~tol / transversality away from the proper hit along a shallow
  // branch, hence the widened merge radius.
  const double merge_eps = std::max(3.0 * tol, 2.0 * tol / opts.transversality_min);
  double max_seg = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) max_seg = std::max(max_seg, c.segment(i).length());
  const double param_eps = (2.0 * max_seg + merge_eps) / std::max(c.length(), 1e-12);

  std::vector<std::size_t> parent(raw.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  const auto find_root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < raw.size(); ++a) {
    for (std::size_t b = a + 1; b < raw.size(); ++b) {
      if (distance(raw[a].point, raw[b].point) > merge_eps) continue;
      // Match the branch parameters as an unordered cyclic pair: hits of a
      // crossing that straddles tau = 0 arrive with the passes swapped.
      const bool direct = cyc_dist(raw[a].tau1, raw[b].tau1) <= param_eps &&
                          cyc_dist(raw[a].tau2, raw[b].tau2) <= param_eps;
      const bool swapped = cyc_dist(raw[a].tau1, raw[b].tau2) <= param_eps &&
                           cyc_dist(raw[a].tau2, raw[b].tau1) <= param_eps;
      if (!direct && !swapped) continue;
      parent[find_root(a)] = find_root(b);
    }
  }
  std::unordered_map<std::size_t, Cluster> clusters;
  for (std::size_t i = 0; i < raw.size(); ++i) clusters[find_root(i)].members.push_back(i);

  const auto fail = [&](const std::string& kind, const std::string& msg, Point2 p) {
    if (strict) throw AssumptionError(msg);
    res.violations.push_back({kind, msg, p});
  };

  for (auto& [root, cluster] : clusters) {
    (void)root;
    // Representative: lowest-(tau1, tau2) proper hit, else lowest touch.
    std::size_t rep = cluster.members.front();
    for (std::size_t m : cluster.members) {
      if (m == rep) continue;
      const bool rep_proper = raw[rep].proper;
      const bool m_proper = raw[m].proper;
      if ((m_proper && !rep_proper) ||
          (m_proper == rep_proper &&
           std::make_pair(raw[m].tau1, raw[m].tau2) <
               std::make_pair(raw[rep].tau1, raw[rep].tau2))) {
        rep = m;
      }
    }

    SelfIntersection x;
    x.tau1 = raw[rep].tau1;
    x.tau2 = raw[rep].tau2;
    x.point = raw[rep].point;
    x.tangent1 = c.tangent_at(x.tau1);
    x.tangent2 = c.tangent_at(x.tau2);
    const double cr = cross2(x.tangent1, x.tangent2);
    if (std::abs(cr) < opts.transversality_min) {
      fail("tangential", "tangential self-intersection", x.point);
      continue;
    }
    x.update = cr > 0.0 ? 1 : -1;
    res.xs.push_back(x);
  }

  std::sort(res.xs.begin(), res.xs.end(), [](const SelfIntersection& a, const SelfIntersection& b) {
    return std::make_pair(a.tau1, a.tau2) < std::make_pair(b.tau1, b.tau2);
  });

  // Distinct crossings sharing one point means a multiplicity above one.
  for (std::size_t a = 0; a < res.xs.size(); ++a) {
    for (std::size_t b = a + 1; b < res.xs.size(); ++b) {
      if (distance(res.xs[a].point, res.xs[b].point) <= merge_eps) {
        fail("multiplicity", "multiplicity greater than one", res.xs[a].point);
      }
    }
  }
  return res;
}

}  // namespace

std::vector<SelfIntersection> find_self_intersections(const Cycle& c,
                                                      const IntersectOptions& opts) {
  return find_impl(c, opts, /*strict=*/true).xs;
}

AssumptionReport validate_assumptions(const Cycle& c, const std::vector<SelfIntersection>& xs,
                                      const IntersectOptions& opts) {
  AssumptionReport report;
  FindResult res = find_impl(c, opts, /*strict=*/false);
  report.violations = std::move(res.violations);

  // Crossings too close to the closure point destabilize the cut at tau = 0.
  for (const SelfIntersection& x : xs) {
    if (distance(x.point, c.points().front()) <= opts.tol) {
      report.violations.push_back(
          {"closure", "self-intersection within tol of the closure point", x.point});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

}  // namespace sweepcov
