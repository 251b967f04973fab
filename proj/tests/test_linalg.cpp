#include <gtest/gtest.h>

#include <random>

#include "hss/error.hpp"
#include "hss/linalg.hpp"
#include "support.hpp"

using namespace hss;
using hss::fixture::matrix;
using hss::fixture::random_matrix;
using hss::fixture::vec;

namespace {
const PrimeField F2(2);
}

TEST(Subspace, SumAndIntersectionExamples) {
  auto e1 = Subspace::span(F2, matrix(3, {{1, 0, 0}}));
  auto e2 = Subspace::span(F2, matrix(3, {{0, 1, 0}}));
  EXPECT_EQ(sum(e1, e2).dim(), 2u);
  auto a = Subspace::span(F2, matrix(3, {{1, 0, 0}, {0, 1, 0}}));
  auto b = Subspace::span(F2, matrix(3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(intersect(a, b), e2);
}

TEST(Subspace, PreimageOfZeroUnderZeroMapIsEverything) {
  auto zero = LinearMap::zero(F2, 3, 2);
  EXPECT_EQ(preimage(zero, Subspace::zero(F2, 2)), Subspace::full(F2, 3));
}

TEST(Subspace, CanonicalBasisIgnoresGeneratingSet) {
  PrimeField f(5);
  auto a = Subspace::span(f, matrix(3, {{1, 2, 3}, {0, 1, 4}}));
  auto b = Subspace::span(f, matrix(3, {{1, 3, 2}, {2, 4, 1}, {1, 2, 3}}));
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.contains(vec({2, 4, 1})));
  EXPECT_FALSE(a.contains(vec({0, 0, 1})));
}

TEST(Subspace, DimensionFormulaOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    PrimeField f(p);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t n = 1 + rep % 9;
      auto a = Subspace::span(f, random_matrix(rng, rep % 5, n, p, 0.4));
      auto b = Subspace::span(f, random_matrix(rng, (rep / 3) % 5, n, p, 0.4));
      const auto s = sum(a, b);
      const auto i = intersect(a, b);
      EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
      EXPECT_TRUE(s.contains(a) && s.contains(b));
      EXPECT_TRUE(a.contains(i) && b.contains(i));
    }
  }
}

TEST(LinearMap, RankNullityAndPreimage) {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 5u}) {
    PrimeField f(p);
    for (int rep = 0; rep < 60; ++rep) {
      const std::size_t src = 1 + rep % 8, dst = 1 + (rep * 5) % 7;
      LinearMap m(f, random_matrix(rng, src, dst, p, 0.5));
      const auto ker = kernel(m);
      const auto img = image(m, Subspace::full(f, src));
      EXPECT_EQ(ker.dim() + img.dim(), src);
      EXPECT_EQ(img.dim(), rank(m.images(), f));
      auto target = Subspace::span(f, random_matrix(rng, 2, dst, p));
      auto pre = preimage(m, target);
      for (std::size_t i = 0; i < pre.dim(); ++i) EXPECT_TRUE(target.contains(m.apply(pre.basis().row(i))));
      EXPECT_TRUE(pre.contains(ker));
      EXPECT_EQ(matrix_kernel(m.images(), f).size(), dst - img.dim());
    }
  }
}

TEST(Subquotient, CoordinatesRoundTrip) {
  PrimeField f(3);
  auto num = Subspace::span(f, matrix(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}));
  auto den = Subspace::span(f, matrix(4, {{1, 1, 0, 0}}));
  Subquotient q(num, den);
  EXPECT_EQ(q.dim(), 2u);
  for (Scalar a = 0; a < 3; ++a)
    for (Scalar b = 0; b < 3; ++b) {
      const Vector c = vec({a, b});
      auto back = q.coords(q.lift(c));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, c);
    }
  EXPECT_FALSE(q.coords(vec({0, 0, 0, 1})).has_value());
  EXPECT_THROW(Subquotient(den, num), std::exception);
}

TEST(InducedMap, IdentityZeroAndSwap) {
  auto num = Subspace::span(F2, matrix(2, {{1, 1}}));
  Subquotient s(num, Subspace::zero(F2, 2));
  auto swap = LinearMap(F2, matrix(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(induced_map(swap, s, s), matrix(1, {{1}}));

  PrimeField f(5);
  Subquotient full(Subspace::full(f, 3), Subspace::span(f, matrix(3, {{0, 0, 1}})));
  EXPECT_EQ(induced_map(LinearMap::identity(f, 3), full, full), Matrix::identity(2));
  EXPECT_TRUE(induced_map(LinearMap::zero(f, 3, 3), full, full).is_zero());
}

TEST(InducedMap, ThrowsWhenNotWellDefined) {
  Subquotient src(Subspace::full(F2, 2), Subspace::zero(F2, 2));
  Subquotient dst(Subspace::span(F2, matrix(2, {{1, 0}})), Subspace::zero(F2, 2));
  EXPECT_THROW(induced_map(LinearMap::identity(F2, 2), src, dst), IllDefinedMap);
}
