// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/cycle.hpp"

#include <algorithm>
#include <cmath>

#include "sweepcov/errors.hpp"

namespace sweepcov {

namespace {

// Duplicate threshold for consecutive construction points.
constexpr double kDupEps = 1e-13;

}  // namespace

Cycle Cycle::from_points(std::vector<Point2> points, CycleSource tag) {
  std::vector<Vec2> tangents(points.size(), Vec2{});
  std::vector<CycleSource> tags(points.size(), tag);
  return from_points(std::move(points), std::move(tangents), std::move(tags));
}

Cycle Cycle::from_points(std::vector<Point2> points, std::vector<Vec2> tangents,
                         std::vector<CycleSource> tags) {
  std::vector<double> gens(points.size(), 0.0);
  return from_points(std::move(points), std::move(tangents), std::move(tags),
                     std::move(gens));
}

Cycle Cycle::from_points(std::vector<Point2> points, std::vector<Vec2> tangents,
                         std::vector<CycleSource> tags, std::vector<double> gens) {
  Cycle c;
  double scale = 1.0;
  for (const Point2& p : points) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double eps = kDupEps * scale;

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!c.pts_.empty() && distance(c.pts_.back(), points[i]) <= eps) continue;
    c.pts_.push_back(points[i]);
    c.tan_.push_back(i < tangents.size() ? tangents[i] : Vec2{});
    c.src_.push_back(i < tags.size() ? tags[i] : CycleSource::synthetic);
    c.gen_.push_back(i < gens.size() ? gens[i] : 0.0);
  }
  // Drop a trailing duplicate of the first point; the closing edge is implied.
  while (c.pts_.size() > 1 && distance(c.pts_.back(), c.pts_.front()) <= eps) {
    c.pts_.pop_back();
    c.tan_.pop_back();
    c.src_.pop_back();
    c.gen_.pop_back();
  }
  if (c.pts_.size() < 3) throw AssumptionError("cycle needs at least 3 points");

  const std::size_t n = c.pts_.size();
  // Chord fallback for missing tangents.
  for (std::size_t i = 0; i < n; ++i) {
    if (c.tan_[i].norm_sq() == 0.0)
      c.tan_[i] = (c.pts_[(i + 1) % n] - c.pts_[i]).normalized();
    else
      c.tan_[i] = c.tan_[i].normalized();
  }
  // Normalized arc-length parameterization, tau[0] = 0.
  c.tau_.resize(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    c.tau_[i] = acc;
    acc += distance(c.pts_[i], c.pts_[(i + 1) % n]);
  }
  for (double& t : c.tau_) t /= acc;
  return c;
}

double Cycle::signed_area() const {
  double a = 0.0;
  const std::size_t n = pts_.size();
  for (std::size_t i = 0; i < n; ++i) a += cross2(pts_[i], pts_[(i + 1) % n]);
  return 0.5 * a;
}

double Cycle::length() const {
  double len = 0.0;
  const std::size_t n = pts_.size();
  for (std::size_t i = 0; i < n; ++i) len += distance(pts_[i], pts_[(i + 1) % n]);
  return len;
}

std::pair<std::size_t, double> Cycle::locate(double tau) const {
  tau -= std::floor(tau);
  const auto it = std::upper_bound(tau_.begin(), tau_.end(), tau);
  const std::size_t i = (it == tau_.begin()) ? pts_.size() - 1 : (it - tau_.begin() - 1);
  const double t0 = tau_[i];
  const double t1 = (i + 1 < tau_.size()) ? tau_[i + 1] : 1.0;
  const double f = (t1 > t0) ? (tau - t0) / (t1 - t0) : 0.0;
  return {i, std::clamp(f, 0.0, 1.0)};
}

double Cycle::tau_of(std::size_t seg_index, double frac) const {
  const std::size_t n = pts_.size();
  seg_index %= n;
  const double t0 = tau_[seg_index];
  const double t1 = (seg_index + 1 < n) ? tau_[seg_index + 1] : 1.0;
  return t0 + frac * (t1 - t0);
}

Point2 Cycle::point_at(double tau) const {
  const auto [i, f] = locate(tau);
  return segment(i).at(f);
}

Vec2 Cycle::tangent_at(double tau) const {
  const auto [i, f] = locate(tau);
  const Vec2 blend = tan_[i] * (1.0 - f) + tan_[(i + 1) % pts_.size()] * f;
  const Vec2 unit = blend.normalized();
  if (unit.norm_sq() > 0.0) return unit;
  return segment(i).dir().normalized();  // near-cusp fallback
}

Cycle Cycle::reversed() const {
  const std::size_t n = pts_.size();
  std::vector<Point2> pts(n);
  std::vector<Vec2> tans(n);
  std::vector<CycleSource> tags(n);
  std::vector<double> gens(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = pts_[n - 1 - i];
    tans[i] = -tan_[n - 1 - i];
    tags[i] = src_[n - 1 - i];
    gens[i] = gen_[n - 1 - i];
  }
  return from_points(std::move(pts), std::move(tans), std::move(tags), std::move(gens));
}

const SegmentSoA& Cycle::soa() const {
  if (soa_.size() != pts_.size()) {
    soa_ = SegmentSoA{};
    for (std::size_t i = 0; i < pts_.size(); ++i) soa_.push(segment(i));
  }
  return soa_;
}

void Cycle::validate(double closure_tol) const {
  if (pts_.size() < 3) throw AssumptionError("cycle needs at least 3 points");
  (void)closure_tol;  // closure is implicit; piecewise builders check their own gap
  for (std::size_t i = 1; i < tau_.size(); ++i) {
    if (!(tau_[i] > tau_[i - 1])) throw AssumptionError("cycle parameterization not increasing");
  }
  for (const Vec2& t : tan_) {
    if (!(t.norm_sq() > 0.0)) throw AssumptionError("cycle tangent vanishes");
  }
}

}  // namespace sweepcov
