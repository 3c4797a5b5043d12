// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "sweepcov/cycle.hpp"
#include "sweepcov/self_intersect.hpp"

namespace sweepcov {

inline constexpr std::uint32_t kNoVertex = 0xffffffffu;

// 1-cell of the arrangement: a run of the cycle between two consecutive
// self-intersection passes, polyline oriented along increasing tau.
struct ArrangementEdge {
  std::uint32_t from_vertex = kNoVertex;
  std::uint32_t to_vertex = kNoVertex;
  double tau_from = 0.0;
  double tau_to = 0.0;
  std::vector<Point2> pline;        // from -> to, both endpoints included
  std::uint32_t left_face = kNoVertex;
  std::uint32_t right_face = kNoVertex;
};

struct FaceInfo {
  double area = 0.0;  // signed area of the boundary walk
  bool unbounded = false;
  int label = 0;
};

// Planar subdivision induced by one cycle, with integer winding labels per
// face (Alexander numbering: adjacent faces differ by exactly one, the face
// on the left of the traversal is greater, the unbounded face is zero).
class CellComplex {
 public:
  // Requires xs from find_self_intersections (validated). Throws
  // AssumptionError("arrangement failure ...") on inconsistent geometry and
  // AssumptionError("non-orientable numbering") if label propagation
  // conflicts.
  static CellComplex build(const Cycle& c, const std::vector<SelfIntersection>& xs,
                           double tol = kDefaultTol);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  const std::vector<SelfIntersection>& vertices() const { return vertices_; }
  const std::vector<ArrangementEdge>& edges() const { return edges_; }
  const std::vector<FaceInfo>& faces() const { return faces_; }
  std::uint32_t unbounded_face() const { return unbounded_face_; }
  int max_label() const { return max_label_; }
  int min_label() const { return min_label_; }
  double tol() const { return tol_; }

  // Face containing p; p must not lie on the curve (within tol).
  std::uint32_t face_at(const Point2& p) const;

  // Winding label at p; on the curve (within tol) the upper semi-continuous
  // extension applies: the maximum label among incident faces.
  int extended_winding(const Point2& p) const;

  double dist_to_curve_sq(const Point2& p) const;

  // A point strictly inside the face (> 2*tol from the curve).
  Point2 face_interior_point(std::uint32_t face) const;

  // Labels of the faces incident to the curve segments intersecting `box`
  // (hull over left/right of each such edge); empty when no segment hits.
  std::pair<bool, std::pair<int, int>> labels_near_box(const Box2& box) const;

  const SegmentSoA& soa() const { return soa_; }
  std::uint32_t edge_of_segment(std::uint32_t seg_index) const {
    return seg_edge_[seg_index];
  }

 private:
  std::vector<SelfIntersection> vertices_;
  std::vector<ArrangementEdge> edges_;
  std::vector<FaceInfo> faces_;
  std::vector<std::vector<std::uint32_t>> face_halfedges_;  // walk per face
  std::vector<std::vector<std::uint32_t>> vertex_out_;      // outgoing HEs, CCW
  std::uint32_t unbounded_face_ = kNoVertex;
  int max_label_ = 0;
  int min_label_ = 0;
  double tol_ = kDefaultTol;
  SegmentSoA soa_;
  std::vector<std::uint32_t> seg_edge_;

  void build_soa();
  void trace_faces();
  void number_faces();
  std::vector<Point2> face_walk_points(std::uint32_t face) const;

  friend struct WindingSet;
  friend std::vector<struct WindingSet> winding_sets(const CellComplex& cx);
};

// Closed region where the winding label is >= level, described by its
// boundary loops (interior on the left).
struct WindingSet {
  int level = 1;
  std::vector<std::vector<Point2>> boundary_loops;
  const CellComplex* complex = nullptr;

  // Closure membership: label >= level, with the limsup rule on the curve.
  bool contains(const Point2& p) const;
};

// Winding sets for levels 1..max_label (empty when max_label < 1).
std::vector<WindingSet> winding_sets(const CellComplex& cx);

}  // namespace sweepcov
