#pragma once

// Row kernels for the narrow (int64-backed) Smith elimination path.
//
// Every value handled here satisfies |x| <= kNarrowBound, so a product of two
// operands fits in 62 bits and a difference never wraps. Kernels report when a
// result leaves the narrow range; the caller then restarts on big integers.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace cob::simd {

inline constexpr std::int64_t kNarrowBound = (std::int64_t{1} << 31) - 1;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct MinAbs {
  std::int64_t value = 0;  // 0 when the row is entirely zero
  std::size_t index = 0;   // lowest index attaining value
};

struct RowKernels {
  Isa isa;
  /// dst[i] -= q * src[i]. Returns true if any result exceeds kNarrowBound in
  /// magnitude; results are still exact in that case.
  bool (*axpy)(std::int64_t* dst, const std::int64_t* src, std::int64_t q,
               std::size_t n);
  /// Smallest nonzero |x|, ties broken by lowest index.
  MinAbs (*min_abs_nonzero)(const std::int64_t* row, std::size_t n);
};

bool isa_supported(Isa isa) noexcept;

/// Kernels for a specific ISA. Throws std::invalid_argument if the ISA is not
/// compiled in or not supported by the running CPU.
const RowKernels& kernels_for(Isa isa);

/// Kernels selected at first use: the widest supported ISA, unless the
/// OPENBOOK_SIMD environment variable names another one ("scalar", "avx2",
/// "neon").
const RowKernels& active_kernels();

/// Overrides the runtime choice. Intended for tests and benchmarks; not safe
/// to call while another thread is running an elimination.
void force_isa(Isa isa);

namespace detail {
bool axpy_scalar(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n);
MinAbs min_abs_nonzero_scalar(const std::int64_t* row, std::size_t n);
#if defined(COB_HAVE_AVX2_KERNELS)
bool axpy_avx2(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n);
MinAbs min_abs_nonzero_avx2(const std::int64_t* row, std::size_t n);
#endif
#if defined(COB_HAVE_NEON_KERNELS)
bool axpy_neon(std::int64_t* dst, const std::int64_t* src, std::int64_t q, std::size_t n);
MinAbs min_abs_nonzero_neon(const std::int64_t* row, std::size_t n);
#endif
}  // namespace detail

}  // namespace cob::simd
