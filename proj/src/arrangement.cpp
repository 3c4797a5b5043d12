// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

// Half-edge id: edge index * 2, +1 for the backward direction.
inline std::uint32_t he_forward(std::uint32_t e) { return 2 * e; }
inline std::uint32_t he_twin(std::uint32_t h) { return h ^ 1u; }
inline std::uint32_t he_edge(std::uint32_t h) { return h / 2; }
inline bool he_is_forward(std::uint32_t h) { return (h & 1u) == 0; }

double shoelace(const std::vector<Point2>& pts) {
  double a = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) a += cross2(pts[i], pts[i + 1]);
  if (!pts.empty()) a += cross2(pts.back(), pts.front());
  return 0.5 * a;
}

}  // namespace

CellComplex CellComplex::build(const Cycle& c, const std::vector<SelfIntersection>& xs,
                               double tol) {
  CellComplex cx;
  cx.tol_ = tol;
  cx.vertices_ = xs;

  if (xs.empty()) {
    // Simple closed curve: one loop edge, two faces.
    ArrangementEdge e;
    e.pline = c.points();
    e.pline.push_back(c.points().front());
    e.tau_from = 0.0;
    e.tau_to = 1.0;
    const double area = c.signed_area();
    // Faces: 0 = interior, 1 = exterior. Interior is left of travel for CCW.
    e.left_face = area >= 0.0 ? 0 : 1;
    e.right_face = area >= 0.0 ? 1 : 0;
    cx.edges_.push_back(std::move(e));
    cx.faces_.resize(2);
    cx.faces_[0].area = std::abs(area);
    cx.faces_[1].area = -std::abs(area);
    cx.faces_[1].unbounded = true;
    cx.unbounded_face_ = 1;
    cx.face_halfedges_ = {{he_forward(0)}, {he_twin(he_forward(0))}};
    cx.number_faces();
    cx.build_soa();
    return cx;
  }

  // Cut the cycle at every intersection pass.
  struct Cut {
    double tau;
    std::uint32_t vertex;
  };
  std::vector<Cut> cuts;
  for (std::uint32_t v = 0; v < xs.size(); ++v) {
    cuts.push_back({xs[v].tau1, v});
    cuts.push_back({xs[v].tau2, v});
  }
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) { return a.tau < b.tau; });

  const auto& taus = c.taus();
  const double scale = std::max(1.0, c.length());
  const double dup_eps = std::max(2.0 * tol, 1e-13 * scale);

  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const Cut& a = cuts[k];
    const Cut& b = cuts[(k + 1) % cuts.size()];
    ArrangementEdge e;
    e.from_vertex = a.vertex;
    e.to_vertex = b.vertex;
    e.tau_from = a.tau;
    e.tau_to = b.tau;
    e.pline.push_back(xs[a.vertex].point);
    const auto push_range = [&](double lo, double hi) {
      auto it = std::upper_bound(taus.begin(), taus.end(), lo);
      for (; it != taus.end() && *it < hi; ++it) {
        const Point2 p = c.points()[it - taus.begin()];
        if (distance(p, xs[a.vertex].point) > dup_eps &&
            distance(p, xs[b.vertex].point) > dup_eps)
          e.pline.push_back(p);
      }
    };
    if (k + 1 < cuts.size()) {
      push_range(a.tau, b.tau);
    } else {
      push_range(a.tau, 1.0 + 1e-18);
      push_range(-1e-18, b.tau);
    }
    e.pline.push_back(xs[b.vertex].point);
    if (e.pline.size() < 2) throw AssumptionError("arrangement failure: empty edge");
    cx.edges_.push_back(std::move(e));
  }

  cx.trace_faces();
  cx.number_faces();
  cx.build_soa();
  return cx;
}

void CellComplex::trace_faces() {
  const std::size_t nv = vertices_.size();
  const std::size_t ne = edges_.size();

  // Outgoing half-edges per vertex with their departure directions.
  std::vector<std::vector<std::pair<double, std::uint32_t>>> out(nv);
  for (std::uint32_t e = 0; e < ne; ++e) {
    const auto& pl = edges_[e].pline;
    const Vec2 d_start = (pl[1] - pl[0]).normalized();
    const Vec2 d_end = (pl[pl.size() - 2] - pl.back()).normalized();
    if (d_start.norm_sq() == 0.0 || d_end.norm_sq() == 0.0)
      throw AssumptionError("arrangement failure: degenerate edge direction");
    out[edges_[e].from_vertex].push_back({std::atan2(d_start.y, d_start.x), he_forward(e)});
    out[edges_[e].to_vertex].push_back({std::atan2(d_end.y, d_end.x), he_twin(he_forward(e))});
  }
  vertex_out_.assign(nv, {});
  std::vector<std::vector<double>> out_angle(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto& lst = out[v];
    if (lst.size() != 4)
      throw AssumptionError("arrangement failure: vertex degree != 4");
    std::sort(lst.begin(), lst.end());
    for (const auto& [ang, he] : lst) {
      vertex_out_[v].push_back(he);
      out_angle[v].push_back(ang);
    }
  }

  // next(h) = clockwise neighbor of twin(h) around the target vertex.
  const auto next_he = [&](std::uint32_t h) {
    const std::uint32_t tw = he_twin(h);
    const std::uint32_t v =
        he_is_forward(h) ? edges_[he_edge(h)].to_vertex : edges_[he_edge(h)].from_vertex;
    const auto& lst = vertex_out_[v];
    const auto it = std::find(lst.begin(), lst.end(), tw);
    if (it == lst.end()) throw AssumptionError("arrangement failure: broken vertex ring");
    const std::size_t pos = static_cast<std::size_t>(it - lst.begin());
    return lst[(pos + lst.size() - 1) % lst.size()];
  };

  // Orbit decomposition: one face per next() cycle (face on the left).
  std::vector<std::uint32_t> face_of(2 * ne, kNoVertex);
  for (std::uint32_t h0 = 0; h0 < 2 * ne; ++h0) {
    if (face_of[h0] != kNoVertex) continue;
    const auto face_id = static_cast<std::uint32_t>(face_halfedges_.size());
    std::vector<std::uint32_t> walk;
    std::uint32_t h = h0;
    do {
      face_of[h] = face_id;
      walk.push_back(h);
      h = next_he(h);
      if (walk.size() > 4 * ne) throw AssumptionError("arrangement failure: runaway walk");
    } while (h != h0);
    face_halfedges_.push_back(std::move(walk));
  }

  faces_.resize(face_halfedges_.size());
  for (std::uint32_t e = 0; e < ne; ++e) {
    edges_[e].left_face = face_of[he_forward(e)];
    edges_[e].right_face = face_of[he_twin(he_forward(e))];
  }

  int negative_faces = 0;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    faces_[f].area = shoelace(face_walk_points(f));
    if (faces_[f].area < 0.0) {
      faces_[f].unbounded = true;
      unbounded_face_ = f;
      ++negative_faces;
    }
  }
  if (negative_faces != 1)
    throw AssumptionError("arrangement failure: unbounded face not unique");

  // Euler relation on the compactified complex.
  if (static_cast<long>(nv) - static_cast<long>(ne) +
          static_cast<long>(faces_.size()) != 2)
    throw AssumptionError("arrangement failure: Euler relation violated");
}

std::vector<Point2> CellComplex::face_walk_points(std::uint32_t face) const {
  std::vector<Point2> pts;
  for (const std::uint32_t h : face_halfedges_[face]) {
    const auto& pl = edges_[he_edge(h)].pline;
    if (he_is_forward(h)) {
      for (std::size_t i = 0; i + 1 < pl.size(); ++i) pts.push_back(pl[i]);
    } else {
      for (std::size_t i = pl.size(); i-- > 1;) pts.push_back(pl[i]);
    }
  }
  return pts;
}

void CellComplex::number_faces() {
  // Breadth-first Moebius propagation from the unbounded face (label 0):
  // along every edge the left face exceeds the right face by exactly one.
  std::vector<bool> done(faces_.size(), false);
  std::deque<std::uint32_t> queue;
  faces_[unbounded_face_].label = 0;
  done[unbounded_face_] = true;
  queue.push_back(unbounded_face_);

  // Edge adjacency per face.
  std::vector<std::vector<std::uint32_t>> face_edges(faces_.size());
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    face_edges[edges_[e].left_face].push_back(e);
    face_edges[edges_[e].right_face].push_back(e);
  }

  std::size_t visited = 1;
  while (!queue.empty()) {
    const std::uint32_t f = queue.front();
    queue.pop_front();
    for (const std::uint32_t e : face_edges[f]) {
      const std::uint32_t lf = edges_[e].left_face;
      const std::uint32_t rf = edges_[e].right_face;
      const std::uint32_t other = (lf == f) ? rf : lf;
      const int implied = (lf == f) ? faces_[f].label - 1 : faces_[f].label + 1;
      if (!done[other]) {
        faces_[other].label = implied;
        done[other] = true;
        queue.push_back(other);
        ++visited;
      } else if (faces_[other].label != implied) {
        throw AssumptionError("non-orientable numbering");
      }
    }
  }
  if (visited != faces_.size())
    throw AssumptionError("arrangement failure: disconnected complex");

  max_label_ = faces_[0].label;
  min_label_ = faces_[0].label;
  for (const FaceInfo& f : faces_) {
    max_label_ = std::max(max_label_, f.label);
    min_label_ = std::min(min_label_, f.label);
  }
  // Final Moebius audit over every edge.
  for (const ArrangementEdge& e : edges_) {
    if (faces_[e.left_face].label - faces_[e.right_face].label != 1)
      throw AssumptionError("non-orientable numbering");
  }
}

void CellComplex::build_soa() {
  soa_ = SegmentSoA{};
  seg_edge_.clear();
  for (std::uint32_t e = 0; e < edges_.size(); ++e) {
    const auto& pl = edges_[e].pline;
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      soa_.push({pl[i], pl[i + 1]});
      seg_edge_.push_back(e);
    }
  }
}

double CellComplex::dist_to_curve_sq(const Point2& p) const {
  return kernels::min_dist_sq(soa_, p);
}

std::uint32_t CellComplex::face_at(const Point2& p) const {
  // Ray casting against the edge soup; rotate the direction until the hit
  // is unambiguous (away from segment ends, vertices and grazing angles).
  constexpr double kGoldenAngle = 2.399963229728653;
  double angle = 0.1234567;
  for (int attempt = 0; attempt < 64; ++attempt, angle += kGoldenAngle) {
    const Vec2 dir{std::cos(angle), std::sin(angle)};
    const kernels::RayHit hit = kernels::ray_first_hit(soa_, p, dir);
    if (hit.index == kernels::kNoIndex) return unbounded_face_;
    const Segment2 seg = soa_.segment(hit.index);
    const Point2 q = p + dir * hit.t;
    const double seg_len = seg.length();
    if (hit.s * seg_len < 3.0 * tol_ || (1.0 - hit.s) * seg_len < 3.0 * tol_) continue;
    bool near_vertex = false;
    for (const SelfIntersection& v : vertices_) {
      if (distance(v.point, q) < 5.0 * tol_) {
        near_vertex = true;
        break;
      }
    }
    if (near_vertex) continue;
    const Vec2 sd = seg.dir();
    if (std::abs(cross2(sd.normalized(), dir)) < 1e-3) continue;  // grazing
    const double side = cross2(sd, p - seg.a);
    if (std::abs(side) <= tol_ * seg_len) continue;  // p on the hit line
    const ArrangementEdge& e = edges_[seg_edge_[hit.index]];
    return side > 0.0 ? e.left_face : e.right_face;
  }
  throw AssumptionError("arrangement failure: point location did not stabilize");
}

int CellComplex::extended_winding(const Point2& p) const {
  const kernels::NearestSeg near = kernels::nearest_segment(soa_, p);
  if (near.dist_sq > tol_ * tol_) return faces_[face_at(p)].label;

  // On the curve: limit superior = max label over incident faces.
  const ArrangementEdge& e = edges_[seg_edge_[near.index]];
  int best = std::max(faces_[e.left_face].label, faces_[e.right_face].label);
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    if (distance(vertices_[v].point, p) <= 3.0 * tol_) {
      for (const std::uint32_t h : vertex_out_[v]) {
        const ArrangementEdge& ve = edges_[he_edge(h)];
        best = std::max({best, faces_[ve.left_face].label, faces_[ve.right_face].label});
      }
    }
  }
  return best;
}

Point2 CellComplex::face_interior_point(std::uint32_t face) const {
  const std::vector<Point2> walk = face_walk_points(face);
  const std::size_t n = walk.size();
  const double clearance = 2.5 * tol_;

  const auto good = [&](const Point2& q) {
    return dist_to_curve_sq(q) > clearance * clearance && face_at(q) == face;
  };

  // Largest triangle of consecutive walk points, then its centroid.
  if (n >= 3) {
    double best_area = 0.0;
    Point2 best_c;
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 &a = walk[i], &b = walk[(i + 1) % n], &c = walk[(i + 2) % n];
      const double ar = std::abs(cross2(b - a, c - a));
      if (ar > best_area) {
        best_area = ar;
        best_c = (a + b + c) * (1.0 / 3.0);
      }
    }
    if (best_area > 0.0 && good(best_c)) return best_c;
  }

  // Fallback: inward offsets from the longest boundary segments. The face is
  // on the left of its walk.
  std::vector<std::pair<double, std::size_t>> by_len;
  for (std::size_t i = 0; i < n; ++i) {
    by_len.push_back({distance(walk[i], walk[(i + 1) % n]), i});
  }
  std::sort(by_len.rbegin(), by_len.rend());
  for (const auto& [len, i] : by_len) {
    if (len <= 0.0) break;
    const Point2 a = walk[i];
    const Point2 b = walk[(i + 1) % n];
    const Point2 mid = (a + b) * 0.5;
    const Vec2 inward = (b - a).perp() * (1.0 / len);
    for (const double frac : {0.25, 0.05, 0.01, 0.002}) {
      const Point2 q = mid + inward * (frac * len);
      if (good(q)) return q;
    }
  }
  throw AssumptionError("arrangement failure: no interior point for face");
}

std::pair<bool, std::pair<int, int>> CellComplex::labels_near_box(const Box2& box) const {
  static thread_local std::vector<std::uint32_t> hits;
  hits.clear();
  kernels::collect_segments_intersecting_box(soa_, box, hits);
  if (hits.empty()) return {false, {0, 0}};
  int lo = INT32_MAX, hi = INT32_MIN;
  for (const std::uint32_t s : hits) {
    const ArrangementEdge& e = edges_[seg_edge_[s]];
    lo = std::min({lo, faces_[e.left_face].label, faces_[e.right_face].label});
    hi = std::max({hi, faces_[e.left_face].label, faces_[e.right_face].label});
  }
  return {true, {lo, hi}};
}

bool WindingSet::contains(const Point2& p) const {
  return complex->extended_winding(p) >= level;
}

std::vector<WindingSet> winding_sets(const CellComplex& cx) {
  std::vector<WindingSet> sets;
  for (int level = 1; level <= cx.max_label(); ++level) {
    WindingSet ws;
    ws.level = level;
    ws.complex = &cx;

    // Boundary half-edges: the >= level side on the left.
    struct BHalf {
      std::uint32_t edge;
      bool forward;
      bool used = false;
    };
    std::vector<BHalf> bhe;
    for (std::uint32_t e = 0; e < cx.edges().size(); ++e) {
      const int ll = cx.faces()[cx.edges()[e].left_face].label;
      const int rl = cx.faces()[cx.edges()[e].right_face].label;
      if (ll >= level && rl < level) bhe.push_back({e, true});
      if (rl >= level && ll < level) bhe.push_back({e, false});
    }

    const auto start_point = [&](const BHalf& h) {
      return h.forward ? cx.edges()[h.edge].pline.front() : cx.edges()[h.edge].pline.back();
    };
    const auto end_point = [&](const BHalf& h) {
      return h.forward ? cx.edges()[h.edge].pline.back() : cx.edges()[h.edge].pline.front();
    };

    for (std::size_t s = 0; s < bhe.size(); ++s) {
      if (bhe[s].used) continue;
      std::vector<Point2> loop;
      std::size_t cur = s;
      bool closed = false;
      while (!bhe[cur].used) {
        bhe[cur].used = true;
        const auto& pl = cx.edges()[bhe[cur].edge].pline;
        if (bhe[cur].forward) {
          for (std::size_t i = 0; i + 1 < pl.size(); ++i) loop.push_back(pl[i]);
        } else {
          for (std::size_t i = pl.size(); i-- > 1;) loop.push_back(pl[i]);
        }
        const Point2 target = end_point(bhe[cur]);
        std::size_t next = SIZE_MAX;
        for (std::size_t k = 0; k < bhe.size(); ++k) {
          if (k == cur || (bhe[k].used && k != s)) continue;
          if (distance(start_point(bhe[k]), target) <= 1e-12) {
            next = k;
            break;
          }
        }
        if (next == SIZE_MAX || next == s) {
          closed = (next == s) || distance(target, loop.front()) <= 1e-12;
          break;
        }
        cur = next;
      }
      if (closed && loop.size() >= 3) ws.boundary_loops.push_back(std::move(loop));
    }
    sets.push_back(std::move(ws));
  }
  return sets;
}

}  // namespace sweepcov
