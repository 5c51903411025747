// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "cob/simd/kernels.hpp"

namespace cob::simd::detail {

bool axpy_avx2(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n) {
  // Operands are narrow, so the low 32 bits of each lane hold the full signed
  // value and _mm256_mul_epi32 yields the exact 64-bit product.
  const __m256i vq = _mm256_set1_epi64x(q);
  const __m256i hi = _mm256_set1_epi64x(kNarrowBound);
  const __m256i lo = _mm256_set1_epi64x(-kNarrowBound);
  __m256i wide = _mm256_setzero_si256();

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
    const __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
    d0 = _mm256_sub_epi64(d0, _mm256_mul_epi32(s0, vq));
    d1 = _mm256_sub_epi64(d1, _mm256_mul_epi32(s1, vq));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(d0, hi));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(lo, d0));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(d1, hi));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(lo, d1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), d1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    d = _mm256_sub_epi64(d, _mm256_mul_epi32(s, vq));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(d, hi));
    wide = _mm256_or_si256(wide, _mm256_cmpgt_epi64(lo, d));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  bool tail_wide = false;
  for (; i < n; ++i) {
    const std::int64_t v = dst[i] - q * src[i];
    dst[i] = v;
    tail_wide |= (v > kNarrowBound) | (v < -kNarrowBound);
  }
  return tail_wide || !_mm256_testz_si256(wide, wide);
}

MinAbs min_abs_nonzero_avx2(const std::int64_t* row, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i none = _mm256_set1_epi64x(INT64_MAX);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i best = none;
  __m256i best_idx = _mm256_setzero_si256();
  __m256i idx = _mm256_setr_epi64x(0, 1, 2, 3);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i neg = _mm256_cmpgt_epi64(zero, x);
    __m256i a = _mm256_sub_epi64(_mm256_xor_si256(x, neg), neg);
    a = _mm256_blendv_epi8(a, none, _mm256_cmpeq_epi64(x, zero));
    // Strictly smaller keeps the earliest index per lane.
    const __m256i better = _mm256_cmpgt_epi64(best, a);
    best = _mm256_blendv_epi8(best, a, better);
    best_idx = _mm256_blendv_epi8(best_idx, idx, better);
    idx = _mm256_add_epi64(idx, step);
    if (!_mm256_testz_si256(_mm256_cmpeq_epi64(best, one), _mm256_cmpeq_epi64(best, one))) {
      i += 4;
      break;
    }
  }

  alignas(32) std::int64_t vals[4];
  alignas(32) std::int64_t idxs[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(vals), best);
  _mm256_store_si256(reinterpret_cast<__m256i*>(idxs), best_idx);
  MinAbs out;
  for (int lane = 0; lane < 4; ++lane) {
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
