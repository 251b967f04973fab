#pragma once

#include <cstdint>

namespace hss {

using Scalar = std::uint32_t;

/// Largest supported characteristic (exclusive). Keeps a*b + c inside 31 bits,
/// which the vectorized row kernels rely on.
inline constexpr std::uint32_t kMaxCharacteristic = 1u << 15;

bool is_prime(std::int64_t value);

/// Arithmetic in Z/pZ for a prime p < kMaxCharacteristic.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar reduce(std::int64_t value) const noexcept {
    auto r = value % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept { return (a * b) % p_; }
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hss
