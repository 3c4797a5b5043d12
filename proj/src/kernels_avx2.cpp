// Copyright (c) 2026 the sweepcov authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 variants of the scan kernels, four segments per iteration. The tail
// of each scan reuses the scalar code so results match the reference
// backend exactly.

#include "sweepcov/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace sweepcov::kernels::detail {

namespace {

__attribute__((target("avx2"))) inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffll));
  return _mm256_and_pd(v, mask);
}

// Lane mask of the separating-axis segment/box overlap test.
__attribute__((target("avx2"))) inline __m256d seg_box_mask(
    const SegmentSoA& soa, std::size_t i, const Box2& box) {
  const __m256d x0 = _mm256_loadu_pd(&soa.x0[i]);
  const __m256d y0 = _mm256_loadu_pd(&soa.y0[i]);
  const __m256d x1 = _mm256_loadu_pd(&soa.x1[i]);
  const __m256d y1 = _mm256_loadu_pd(&soa.y1[i]);
  const __m256d ex = _mm256_sub_pd(x1, x0);
  const __m256d ey = _mm256_sub_pd(y1, y0);
  const __m256d bsx = _mm256_set1_pd(box.x.lo + box.x.hi);
  const __m256d bsy = _mm256_set1_pd(box.y.lo + box.y.hi);
  const __m256d m2x = _mm256_sub_pd(_mm256_add_pd(x0, x1), bsx);
  const __m256d m2y = _mm256_sub_pd(_mm256_add_pd(y0, y1), bsy);
  const __m256d h2x = _mm256_set1_pd(box.x.hi - box.x.lo);
  const __m256d h2y = _mm256_set1_pd(box.y.hi - box.y.lo);

  const __m256d ok_x = _mm256_cmp_pd(abs_pd(m2x), _mm256_add_pd(h2x, abs_pd(ex)), _CMP_LE_OQ);
  const __m256d ok_y = _mm256_cmp_pd(abs_pd(m2y), _mm256_add_pd(h2y, abs_pd(ey)), _CMP_LE_OQ);
  const __m256d cr = _mm256_sub_pd(_mm256_mul_pd(ex, m2y), _mm256_mul_pd(ey, m2x));
  const __m256d lim = _mm256_add_pd(_mm256_mul_pd(h2x, abs_pd(ey)),
                                    _mm256_mul_pd(h2y, abs_pd(ex)));
  const __m256d ok_n = _mm256_cmp_pd(abs_pd(cr), lim, _CMP_LE_OQ);
  return _mm256_and_pd(_mm256_and_pd(ok_x, ok_y), ok_n);
}

}  // namespace

__attribute__((target("avx2"))) bool any_hit_avx2(const SegmentSoA& soa, const Box2& box) {
  const std::size_t n = soa.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (_mm256_movemask_pd(seg_box_mask(soa, i, box)) != 0) return true;
  }
  for (; i < n; ++i) {
    SegmentSoA one;
    one.push(soa.segment(i));
    if (any_hit_scalar(one, box)) return true;
  }
  return false;
}

__attribute__((target("avx2"))) void collect_hits_avx2(
    const SegmentSoA& soa, const Box2& box, std::vector<std::uint32_t>& out) {
  const std::size_t n = soa.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const int mask = _mm256_movemask_pd(seg_box_mask(soa, i, box));
    if (mask == 0) continue;
    for (int lane = 0; lane < 4; ++lane) {
      if (mask & (1 << lane)) out.push_back(static_cast<std::uint32_t>(i + lane));
    }
  }
  for (; i < n; ++i) {
    SegmentSoA one;
    one.push(soa.segment(i));
    if (any_hit_scalar(one, box)) out.push_back(static_cast<std::uint32_t>(i));
  }
}

__attribute__((target("avx2"))) NearestSeg nearest_avx2(const SegmentSoA& soa,
                                                        const Point2& p) {
  const std::size_t n = soa.size();
  const __m256d px = _mm256_set1_pd(p.x);
  const __m256d py = _mm256_set1_pd(p.y);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best_d2 = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best_ix = _mm256_set1_pd(-1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(&soa.x0[i]);
    const __m256d y0 = _mm256_loadu_pd(&soa.y0[i]);
    const __m256d x1 = _mm256_loadu_pd(&soa.x1[i]);
    const __m256d y1 = _mm256_loadu_pd(&soa.y1[i]);
    const __m256d dx = _mm256_sub_pd(px, x0);
    const __m256d dy = _mm256_sub_pd(py, y0);
    const __m256d ex = _mm256_sub_pd(x1, x0);
    const __m256d ey = _mm256_sub_pd(y1, y0);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
    const __m256d tnum = _mm256_add_pd(_mm256_mul_pd(dx, ex), _mm256_mul_pd(dy, ey));
    __m256d t = _mm256_div_pd(tnum, den);
    const __m256d pos = _mm256_cmp_pd(den, zero, _CMP_GT_OQ);
    t = _mm256_blendv_pd(zero, t, pos);
    t = _mm256_max_pd(t, zero);
    t = _mm256_min_pd(t, one);
    const __m256d qx = _mm256_sub_pd(dx, _mm256_mul_pd(t, ex));
    const __m256d qy = _mm256_sub_pd(dy, _mm256_mul_pd(t, ey));
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(qx, qx), _mm256_mul_pd(qy, qy));
    const __m256d lt = _mm256_cmp_pd(d2, best_d2, _CMP_LT_OQ);
    const __m256d ix = _mm256_set_pd(static_cast<double>(i + 3), static_cast<double>(i + 2),
                                     static_cast<double>(i + 1), static_cast<double>(i));
    best_d2 = _mm256_blendv_pd(best_d2, d2, lt);
    best_ix = _mm256_blendv_pd(best_ix, ix, lt);
  }

  alignas(32) double d2s[4];
  alignas(32) double ixs[4];
  _mm256_store_pd(d2s, best_d2);
  _mm256_store_pd(ixs, best_ix);
  NearestSeg best;
  for (int lane = 0; lane < 4; ++lane) {
    if (ixs[lane] < 0.0) continue;
    const auto idx = static_cast<std::uint32_t>(ixs[lane]);
    if (d2s[lane] < best.dist_sq ||
        (d2s[lane] == best.dist_sq && idx < best.index)) {
      best.dist_sq = d2s[lane];
      best.index = idx;
    }
  }
  for (; i < n; ++i) {
    SegmentSoA one;
    one.push(soa.segment(i));
    const NearestSeg tail = nearest_scalar(one, p);
    if (tail.dist_sq < best.dist_sq) {
      best.dist_sq = tail.dist_sq;
      best.index = static_cast<std::uint32_t>(i);
    }
  }
  return best;
}

__attribute__((target("avx2"))) RayHit ray_avx2(const SegmentSoA& soa,
                                                const Point2& origin, const Vec2& dir) {
  const std::size_t n = soa.size();
  const __m256d ox = _mm256_set1_pd(origin.x);
  const __m256d oy = _mm256_set1_pd(origin.y);
  const __m256d vx = _mm256_set1_pd(dir.x);
  const __m256d vy = _mm256_set1_pd(dir.y);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d best_t = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best_s = zero;
  __m256d best_ix = _mm256_set1_pd(-1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(&soa.x0[i]);
    const __m256d y0 = _mm256_loadu_pd(&soa.y0[i]);
    const __m256d x1 = _mm256_loadu_pd(&soa.x1[i]);
    const __m256d y1 = _mm256_loadu_pd(&soa.y1[i]);
    const __m256d rx = _mm256_sub_pd(x0, ox);
    const __m256d ry = _mm256_sub_pd(y0, oy);
    const __m256d ex = _mm256_sub_pd(x1, x0);
    const __m256d ey = _mm256_sub_pd(y1, y0);
    const __m256d den = _mm256_sub_pd(_mm256_mul_pd(vx, ey), _mm256_mul_pd(vy, ex));
    const __m256d t = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(rx, ey), _mm256_mul_pd(ry, ex)), den);
    const __m256d s = _mm256_div_pd(
        _mm256_sub_pd(_mm256_mul_pd(rx, vy), _mm256_mul_pd(ry, vx)), den);
    __m256d ok = _mm256_cmp_pd(s, zero, _CMP_GE_OQ);
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(s, one, _CMP_LT_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(t, zero, _CMP_GT_OQ));
    ok = _mm256_and_pd(ok, _mm256_cmp_pd(t, best_t, _CMP_LT_OQ));
    const __m256d ix = _mm256_set_pd(static_cast<double>(i + 3), static_cast<double>(i + 2),
                                     static_cast<double>(i + 1), static_cast<double>(i));
    best_t = _mm256_blendv_pd(best_t, t, ok);
    best_s = _mm256_blendv_pd(best_s, s, ok);
    best_ix = _mm256_blendv_pd(best_ix, ix, ok);
  }

  alignas(32) double ts[4];
  alignas(32) double ss[4];
  alignas(32) double ixs[4];
  _mm256_store_pd(ts, best_t);
  _mm256_store_pd(ss, best_s);
  _mm256_store_pd(ixs, best_ix);
  RayHit best;
  for (int lane = 0; lane < 4; ++lane) {
    if (ixs[lane] < 0.0) continue;
    const auto idx = static_cast<std::uint32_t>(ixs[lane]);
    if (ts[lane] < best.t || (ts[lane] == best.t && idx < best.index)) {
      best.t = ts[lane];
      best.s = ss[lane];
      best.index = idx;
    }
  }
  for (; i < n; ++i) {
    SegmentSoA one;
    one.push(soa.segment(i));
    const RayHit tail = ray_scalar(one, origin, dir);
    if (tail.index != kNoIndex && tail.t < best.t) {
      best.t = tail.t;
      best.s = tail.s;
      best.index = static_cast<std::uint32_t>(i);
    }
  }
  return best;
}

}  // namespace sweepcov::kernels::detail

#endif  // x86_64
