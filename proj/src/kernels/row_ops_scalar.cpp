#include "hss/kernels.hpp"

namespace hss::kernels {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::uint32_t p,
                 std::size_t n) {
  if (c == 0) return;
  for (std::size_t k = 0; k < n; ++k) {
    dst[k] = (dst[k] + c * src[k]) % p;
  }
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::uint32_t p, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    row[k] = (c * row[k]) % p;
  }
}

}  // namespace hss::kernels
