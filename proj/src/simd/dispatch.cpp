#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cob/simd/kernels.hpp"

namespace cob::simd {

namespace {

constexpr RowKernels kScalar{Isa::Scalar, &detail::axpy_scalar, &detail::min_abs_nonzero_scalar};
#if defined(COB_HAVE_AVX2_KERNELS)
constexpr RowKernels kAvx2{Isa::Avx2, &detail::axpy_avx2, &detail::min_abs_nonzero_avx2};
#endif
#if defined(COB_HAVE_NEON_KERNELS)
constexpr RowKernels kNeon{Isa::Neon, &detail::axpy_neon, &detail::min_abs_nonzero_neon};
#endif

const RowKernels* widest_supported() {
#if defined(COB_HAVE_AVX2_KERNELS)
  if (isa_supported(Isa::Avx2)) return &kAvx2;
#endif
#if defined(COB_HAVE_NEON_KERNELS)
  if (isa_supported(Isa::Neon)) return &kNeon;
#endif
  return &kScalar;
}

const RowKernels* initial_choice() {
  if (const char* env = std::getenv("OPENBOOK_SIMD")) {
    const std::string want(env);
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
      if (want == to_string(isa) && isa_supported(isa)) return &kernels_for(isa);
  }
  return widest_supported();
}

std::atomic<const RowKernels*>& slot() {
  static std::atomic<const RowKernels*> active{initial_choice()};
  return active;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(COB_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(COB_HAVE_NEON_KERNELS)
      return true;  // baseline on AArch64
#else
      return false;
#endif
  }
  return false;
}

const RowKernels& kernels_for(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument("SIMD kernels not available: " + std::string(to_string(isa)));
  switch (isa) {
    case Isa::Scalar: return kScalar;
#if defined(COB_HAVE_AVX2_KERNELS)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(COB_HAVE_NEON_KERNELS)
    case Isa::Neon: return kNeon;
#endif
    default: break;
  }
  return kScalar;
}

const RowKernels& active_kernels() { return *slot().load(std::memory_order_acquire); }

void force_isa(Isa isa) { slot().store(&kernels_for(isa), std::memory_order_release); }

}  // namespace cob::simd
