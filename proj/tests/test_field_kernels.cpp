#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hss/error.hpp"
#include "hss/field.hpp"
#include "hss/kernels.hpp"
#include "hss/linalg.hpp"
#include "support.hpp"

using namespace hss;

TEST(PrimeField, RejectsCompositesAndLargePrimes) {
  EXPECT_THROW(PrimeField(4), ValidationError);
  EXPECT_THROW(PrimeField(1), ValidationError);
  EXPECT_THROW(PrimeField(32771), ValidationError);
  EXPECT_NO_THROW(PrimeField(32749));
}

TEST(PrimeField, InversesAndReduction) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32749u}) {
    PrimeField f(p);
    for (Scalar a = 1; a < std::min<std::uint32_t>(p, 500); ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.reduce(-1), p - 1);
    EXPECT_EQ(f.reduce(static_cast<std::int64_t>(p) * 3 + 1), 1u % p);
  }
  EXPECT_THROW(PrimeField(5).inv(0), std::exception);
}

class KernelEquivalence : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(KernelEquivalence, AxpyAndScaleMatchScalarReference) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 variant not available on this machine";
  const std::uint32_t p = GetParam();
  const auto& scalar = kernels::kernels_for(kernels::Isa::Scalar);
  const auto& vec = kernels::kernels_for(kernels::Isa::Avx2);
  ASSERT_EQ(vec.isa, kernels::Isa::Avx2);
  std::mt19937_64 rng(p);
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 100u, 257u}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::uint32_t> dst(n), src(n);
      for (auto& x : dst) x = value(rng);
      for (auto& x : src) x = value(rng);
      const std::uint32_t c = value(rng);
      auto a = dst, b = dst;
      scalar.axpy(a.data(), src.data(), c, p, n);
      vec.axpy(b.data(), src.data(), c, p, n);
      ASSERT_EQ(a, b) << "axpy n=" << n << " c=" << c;
      scalar.scale(a.data(), c, p, n);
      vec.scale(b.data(), c, p, n);
      ASSERT_EQ(a, b) << "scale n=" << n << " c=" << c;
    }
  }
}

TEST_P(KernelEquivalence, EliminationAgreesAcrossVariants) {
  const std::uint32_t p = GetParam();
  PrimeField f(p);
  std::mt19937_64 rng(p * 7 + 1);
  for (int rep = 0; rep < 30; ++rep) {
    Matrix m = fixture::random_matrix(rng, 1 + rep % 13, 1 + (rep * 7) % 29, p);
    kernels::set_active(kernels::Isa::Scalar);
    Matrix a = m;
    auto pa = rref_in_place(a, f);
    kernels::set_active(kernels::Isa::Avx2);
    Matrix b = m;
    auto pb = rref_in_place(b, f);
    EXPECT_EQ(pa, pb);
    EXPECT_EQ(a, b);
  }
  kernels::set_active(kernels::avx2_available() ? kernels::Isa::Avx2 : kernels::Isa::Scalar);
}

INSTANTIATE_TEST_SUITE_P(Primes, KernelEquivalence, ::testing::Values(2u, 3u, 5u, 251u, 32749u));
