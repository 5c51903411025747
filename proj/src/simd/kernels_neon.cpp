// AArch64 variant; compiled only on ARM targets.

#include <arm_neon.h>

#include "cob/simd/kernels.hpp"

namespace cob::simd::detail {

bool axpy_neon(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n) {
  const int32x2_t vq = vdup_n_s32(static_cast<std::int32_t>(q));
  const int64x2_t hi = vdupq_n_s64(kNarrowBound);
  const int64x2_t lo = vdupq_n_s64(-kNarrowBound);
  uint64x2_t wide = vdupq_n_u64(0);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const int64x2_t s = vld1q_s64(src + i);
    const int64x2_t d = vmlsl_s32(vld1q_s64(dst + i), vmovn_s64(s), vq);
    wide = vorrq_u64(wide, vcgtq_s64(d, hi));
    wide = vorrq_u64(wide, vcltq_s64(d, lo));
    vst1q_s64(dst + i, d);
  }
  bool tail_wide = false;
  for (; i < n; ++i) {
    const std::int64_t v = dst[i] - q * src[i];
    dst[i] = v;
    tail_wide |= (v > kNarrowBound) | (v < -kNarrowBound);
  }
  return tail_wide || (vgetq_lane_u64(wide, 0) | vgetq_lane_u64(wide, 1)) != 0;
}

MinAbs min_abs_nonzero_neon(const std::int64_t* row, std::size_t n) {
  const int64x2_t none = vdupq_n_s64(INT64_MAX);
  int64x2_t best = none;
  int64x2_t best_idx = vdupq_n_s64(0);
  int64x2_t idx = {0, 1};
  const int64x2_t step = vdupq_n_s64(2);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const int64x2_t x = vld1q_s64(row + i);
    int64x2_t a = vabsq_s64(x);
    a = vbslq_s64(vceqzq_s64(x), none, a);
    const uint64x2_t better = vcltq_s64(a, best);
    best = vbslq_s64(better, a, best);
    best_idx = vbslq_s64(better, idx, best_idx);
    idx = vaddq_s64(idx, step);
    if (vgetq_lane_s64(best, 0) == 1 || vgetq_lane_s64(best, 1) == 1) {
      i += 2;
      break;
    }
  }

  MinAbs out;
  const std::int64_t vals[2] = {vgetq_lane_s64(best, 0), vgetq_lane_s64(best, 1)};
  const std::int64_t idxs[2] = {vgetq_lane_s64(best_idx, 0), vgetq_lane_s64(best_idx, 1)};
  for (int lane = 0; lane < 2; ++lane) {
    if (vals[lane] == INT64_MAX) continue;
    const auto li = static_cast<std::size_t>(idxs[lane]);
    if (out.value == 0 || vals[lane] < out.value || (vals[lane] == out.value && li < out.index))
      out = {vals[lane], li};
  }
  if (out.value == 1) return out;
  for (; i < n; ++i) {
    const std::int64_t v = row[i] < 0 ? -row[i] : row[i];
    if (v != 0 && (out.value == 0 || v < out.value)) {
      out = {v, i};
      if (v == 1) break;
    }
  }
  return out;
}

}  // namespace cob::simd::detail
