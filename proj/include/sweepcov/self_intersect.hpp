// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sweepcov/cycle.hpp"

namespace sweepcov {

// A transversal self-intersection of a cycle: the curve passes through
// `point` at parameters tau1 < tau2. update is the sign of
// cross2(tangent1, tangent2): +1 when the second pass crosses the first
// from right to left.
struct SelfIntersection {
  double tau1 = 0.0;
  double tau2 = 0.0;
  Point2 point;
  Vec2 tangent1;
  Vec2 tangent2;
  int update = 0;
};

struct IntersectOptions {
  double tol = kDefaultTol;
  // Minimum |sin| of the crossing angle between unit tangents.
  double transversality_min = 0.01;
};

// All proper crossings between non-adjacent polyline segments, deduplicated
// within 3*tol, sorted by (tau1, tau2). Throws AssumptionError
// ("tangential self-intersection" / "multiplicity greater than one") when
// the cycle violates the method assumptions.
std::vector<SelfIntersection> find_self_intersections(const Cycle& c,
                                                      const IntersectOptions& opts = {});

struct AssumptionReport {
  struct Item {
    std::string kind;  // "tangential", "multiplicity", "closure"
    std::string message;
    Point2 point;
  };
  bool pass = true;
  std::vector<Item> violations;
};

// Non-throwing audit of the same assumptions plus crossings near the
// closure point.
AssumptionReport validate_assumptions(const Cycle& c,
                                      const std::vector<SelfIntersection>& xs,
                                      const IntersectOptions& opts = {});

}  // namespace sweepcov
