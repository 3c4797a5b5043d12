// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

#include "sweepcov/coverage.hpp"

#include <algorithm>

#include "sweepcov/errors.hpp"

namespace sweepcov {

CoverageField CoverageField::build(const PoseTrajectory& traj, const SensorConfig& cfg,
                                   const PipelineOptions& opts) {
  CoverageField field;
  field.opts_ = opts;

  double resolution = opts.resolution;
  if (!(resolution > 0.0)) {
    // Fine enough that the Lipschitz pad of a leaf cell drops below the
    // determinant scale: about two median sample steps per cell.
    const auto samples = traj.samples();
    std::vector<double> steps;
    steps.reserve(samples.size());
    for (std::size_t i = 1; i < samples.size(); ++i)
      steps.push_back(samples[i].t - samples[i - 1].t);
    std::nth_element(steps.begin(), steps.begin() + steps.size() / 2, steps.end());
    const double median_dt = steps[steps.size() / 2];
    resolution =
        std::clamp(2.0 * median_dt / traj.duration(), 1.0 / 65536.0, 1.0 / 128.0);
  }

  const double inset = contour_time_inset(traj, cfg, opts.tol);
  field.decomposition_ = decompose_signed_regions(traj, cfg, resolution,
                                                  traj.t_start() + inset,
                                                  traj.t_end() - inset);
  for (const WaterfallRect& cell : field.decomposition_.unresolved) {
    field.unresolved_images_.push_back(waterfall_cell_image(cell, traj, cfg));
    field.unresolved_time_.push_back(cell.t);
  }

  const ContourOptions copts{opts.sampling, opts.tol};
  SignedContours contours = build_signed_contours(traj, cfg, field.decomposition_, copts);
  const IntersectOptions iopts{opts.tol, opts.transversality_min};

  const auto add = [&](Cycle&& cyc, bool backward) {
    cyc.validate(opts.tol);
    std::vector<SelfIntersection> xs = find_self_intersections(cyc, iopts);
    field.reports_.push_back(validate_assumptions(cyc, xs, iopts));
    CellComplex cx = CellComplex::build(cyc, xs, opts.tol);
    field.loops_.push_back({std::move(cyc), std::move(cx), backward});
  };
  for (Cycle& cyc : contours.gamma_plus) add(std::move(cyc), false);
  for (Cycle& cyc : contours.gamma_minus) add(std::move(cyc), true);
  return field;
}

int CoverageField::measure(const Point2& p) const {
  int total = 0;
  for (const LabeledCycle& lc : loops_) total += lc.complex.extended_winding(p);
  return total;
}

CoverageValue CoverageField::box_value(const Box2& box) const {
  const Box2 probe = box.inflated(opts_.tol);
  int lo = 0, hi = 0;
  for (const LabeledCycle& lc : loops_) {
    const auto [hit, bounds] = lc.complex.labels_near_box(probe);
    if (hit) {
      lo += bounds.first;
      hi += bounds.second;
    } else {
      const int label = lc.complex.extended_winding(box.center());
      lo += label;
      hi += label;
    }
  }
  // Preimages inside unresolved cells cancel out of the signed winding sum,
  // so boxes touching their images can undercount.
  hi += unresolved_extra(probe);
  return {std::max(lo, 0), std::max(hi, 0)};
}

bool CoverageField::near_sign_boundary(const Box2& box) const {
  for (const Box2& img : unresolved_images_) {
    if (img.intersects(box)) return true;
  }
  return false;
}

int CoverageField::unresolved_extra(const Box2& box) const {
  // Conservative extra count: up to two preimages per connected time window
  // of unresolved cells whose image touches the box.
  std::vector<Interval> windows;
  for (std::size_t k = 0; k < unresolved_images_.size(); ++k) {
    if (unresolved_images_[k].intersects(box)) windows.push_back(unresolved_time_[k]);
  }
  if (windows.empty()) return 0;
  std::sort(windows.begin(), windows.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  int clusters = 1;
  double reach = windows.front().hi;
  for (const Interval& w : windows) {
    if (w.lo > reach) {
      ++clusters;
      reach = w.hi;
    } else {
      reach = std::max(reach, w.hi);
    }
  }
  return 2 * clusters;
}

int CoverageField::max_coverage_label() const {
  int total = 0;
  for (const LabeledCycle& lc : loops_) total += std::max(lc.complex.max_label(), 0);
  return total;
}

int coverage_measure(const PoseTrajectory& traj, const SensorConfig& cfg, const Point2& p,
                     const PipelineOptions& opts) {
  return CoverageField::build(traj, cfg, opts).measure(p);
}

CellComplex contour_complex(const PoseTrajectory& traj, const SensorConfig& cfg,
                            const PipelineOptions& opts) {
  const Cycle contour = build_contour(traj, cfg, {opts.sampling, opts.tol});
  const std::vector<SelfIntersection> xs =
      find_self_intersections(contour, {opts.tol, opts.transversality_min});
  return CellComplex::build(contour, xs, opts.tol);
}

namespace {

void classify_node(const CoverageField& field, const Box2& box, double epsilon,
                   std::vector<PavingLeaf>& leaves) {
  const double tol = field.options().tol;
  const Box2 probe = box.inflated(tol);
  bool any_hit = field.near_sign_boundary(probe);
  for (const LabeledCycle& lc : field.loops()) {
    if (any_hit) break;
    if (kernels::any_segment_intersects_box(lc.complex.soa(), probe)) any_hit = true;
  }
  if (!any_hit) {
    // Locally constant winding: one query decides the whole box.
    const int v = field.measure(box.center());
    leaves.push_back({box, {v, v}});
    return;
  }
  if (box.max_side() <= epsilon) {
    leaves.push_back({box, field.box_value(box)});
    return;
  }
  const auto [first, second] = box_bisect(box);
  classify_node(field, first, epsilon, leaves);
  classify_node(field, second, epsilon, leaves);
}

}  // namespace

Paving classify_roi(const CoverageField& field, const Box2& roi, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (roi.is_empty()) throw std::invalid_argument("roi must be nonempty");
  Paving paving;
  paving.roi = roi;
  paving.epsilon = epsilon;
  classify_node(field, roi, epsilon, paving.leaves);
  return paving;
}

Paving classify_roi(const PoseTrajectory& traj, const SensorConfig& cfg, const Box2& roi,
                    double epsilon, const PipelineOptions& opts) {
  return classify_roi(CoverageField::build(traj, cfg, opts), roi, epsilon);
}

ExploredArea explored_area(const Paving& paving) {
  ExploredArea out;
  for (const PavingLeaf& leaf : paving.leaves) {
    if (leaf.value.lo >= 1) {
      out.inner.push_back(leaf.box);
      out.inner_area += leaf.box.area();
    }
    if (leaf.value.hi >= 1) {
      out.outer.push_back(leaf.box);
      out.outer_area += leaf.box.area();
    }
  }
  return out;
}

}  // namespace sweepcov
