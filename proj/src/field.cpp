#include "hss/field.hpp"

#include "hss/error.hpp"

namespace hss {

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= kMaxCharacteristic) {
    throw ValidationError("characteristic must be a prime below " +
                          std::to_string(kMaxCharacteristic) + ", got " + std::to_string(p));
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw InternalError("inverse of zero in F_" + std::to_string(p_));
  // Fermat: a^(p-2).
  Scalar result = 1;
  Scalar base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

}  // namespace hss
