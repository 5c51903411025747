#include "cob/simd/kernels.hpp"

namespace cob::simd::detail {

bool axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n) {
  bool wide = false;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = dst[i] - q * src[i];
    dst[i] = v;
    wide |= (v > kNarrowBound) | (v < -kNarrowBound);
  }
  return wide;
}

MinAbs min_abs_nonzero_scalar(const std::int64_t* row, std::size_t n) {
  MinAbs best;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t v = row[i] < 0 ? -row[i] : row[i];
    if (v != 0 && (best.value == 0 || v < best.value)) {
      best = {v, i};
      if (v == 1) break;
    }
  }
  return best;
}

}  // namespace cob::simd::detail
