// AVX2 row kernels. This translation unit is the only one compiled with -mavx2;
// callers reach it through the dispatch table after a CPU check.

#include "hss/kernels.hpp"

#if defined(HSS_BUILD_AVX2)

#include <immintrin.h>

namespace hss::kernels {
namespace {

// Reduce eight lanes holding values in [0, 2^31) modulo p.
// The quotient estimate uses doubles, which hold every such value exactly;
// the estimate can be off by one, so both directions are corrected.
inline __m256i reduce_lanes(__m256i t, __m256i vp, __m256d inv_p) {
  __m256d lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(t));
  __m256d hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(t, 1));
  __m128i qlo = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(lo, inv_p)));
  __m128i qhi = _mm256_cvttpd_epi32(_mm256_floor_pd(_mm256_mul_pd(hi, inv_p)));
  __m256i q = _mm256_inserti128_si256(_mm256_castsi128_si256(qlo), qhi, 1);
  __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
  const __m256i zero = _mm256_setzero_si256();
  r = _mm256_add_epi32(r, _mm256_and_si256(_mm256_cmpgt_epi32(zero, r), vp));
  r = _mm256_sub_epi32(r, _mm256_andnot_si256(_mm256_cmpgt_epi32(vp, r), vp));
  return r;
}

}  // namespace

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
               std::size_t n) {
  if (c == 0) return;
  std::size_t k = 0;
  if (p == 2) {
    // c == 1: addition is xor.
    for (; k + 8 <= n; k += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(d, s));
    }
  } else {
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
    for (; k + 8 <= n; k += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
      __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, vc));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce_lanes(t, vp, inv_p));
    }
  }
  for (; k < n; ++k) {
    dst[k] = (dst[k] + c * src[k]) % p;
  }
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  std::size_t k = 0;
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  for (; k + 8 <= n; k += 8) {
    __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    __m256i t = _mm256_mullo_epi32(r, vc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + k), reduce_lanes(t, vp, inv_p));
  }
  for (; k < n; ++k) {
    row[k] = (c * row[k]) % p;
  }
}

}  // namespace hss::kernels

#endif  // HSS_BUILD_AVX2
