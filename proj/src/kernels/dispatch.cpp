#include <atomic>

#include "hss/kernels.hpp"

namespace hss::kernels {
namespace {

constexpr RowKernels kScalar{Isa::Scalar, "scalar", &axpy_scalar, &scale_scalar};
#if defined(HSS_BUILD_AVX2)
constexpr RowKernels kAvx2{Isa::Avx2, "avx2", &axpy_avx2, &scale_avx2};
#endif

const RowKernels* detect() {
#if defined(HSS_BUILD_AVX2)
  if (avx2_available()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const RowKernels*>& slot() {
  static std::atomic<const RowKernels*> current{detect()};
  return current;
}

}  // namespace

bool avx2_available() {
#if defined(HSS_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

const RowKernels& kernels_for(Isa isa) {
#if defined(HSS_BUILD_AVX2)
  if (isa == Isa::Avx2 && avx2_available()) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const RowKernels& active() { return *slot().load(std::memory_order_relaxed); }

void set_active(Isa isa) { slot().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace hss::kernels
