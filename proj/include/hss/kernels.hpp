#pragma once

// Row kernels for dense elimination over Z/pZ.
//
// Every kernel exists as a portable scalar reference and, where the build
// and the CPU allow it, an AVX2 variant. The active set is picked once at
// first use; tests can pin a variant to compare them.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hss::kernels {

/// dst[k] = (dst[k] + c * src[k]) mod p. Inputs must already be reduced.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                        std::uint32_t p, std::size_t n);
/// row[k] = (c * row[k]) mod p.
using ScaleFn = void (*)(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);

enum class Isa { Scalar, Avx2 };

struct RowKernels {
  Isa isa;
  std::string_view name;
  AxpyFn axpy;
  ScaleFn scale;
};

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                 std::size_t n);
void scale_scalar(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);

#if defined(HSS_BUILD_AVX2)
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
               std::size_t n);
void scale_avx2(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n);
#endif

/// True when the library was built with the AVX2 variant and the CPU reports AVX2.
bool avx2_available();

/// Kernels for a specific ISA; falls back to scalar when the ISA is unavailable.
const RowKernels& kernels_for(Isa isa);

/// The kernels used by the linear algebra layer.
const RowKernels& active();

/// Pin the active kernels (tests and benchmarks). Not thread-safe against
/// concurrent elimination; call before starting work.
void set_active(Isa isa);

}  // namespace hss::kernels
