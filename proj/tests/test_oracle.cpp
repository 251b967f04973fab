#include <gtest/gtest.h>

#include "hss/engine.hpp"
#include "hss/oracle.hpp"
#include "support.hpp"

using namespace hss;
using hss::fixture::graded_complex;

TEST(HomologyTotal, Examples) {
  for (const auto& [deg, dim] : homology_total(graded_complex(1, 2, {}))) EXPECT_EQ(dim, 0u) << deg;
  EXPECT_EQ(homology_total(graded_complex(1, 2, {{"x", 1, {1}}, {"y", 0, {0}}}, {{"x", "y", 1}})),
            (DegreeDims{{0, 0}, {1, 0}}));
  EXPECT_EQ(homology_total(graded_complex(1, 2, {{"x", 1, {1}}, {"y", 0, {0}}, {"z", 0, {0}}})),
            (DegreeDims{{0, 2}, {1, 1}}));
}

TEST(ClassicalSS, OneDifferential) {
  auto c = graded_complex(1, 2, {{"x", 1, {1}}, {"y", 0, {0}}}, {{"x", "y", 1}});
  auto ss = classical_ss(c, 4);
  EXPECT_EQ(ss.page(1, 0), (DegreeDims{{0, 1}, {1, 0}}));
  EXPECT_EQ(ss.page(1, 1), (DegreeDims{{0, 0}, {1, 1}}));
  for (std::int64_t p = -1; p <= 2; ++p) {
    EXPECT_EQ(ss.page(2, p), (DegreeDims{{0, 0}, {1, 0}}));
    EXPECT_EQ(ss.limit_term(p), (DegreeDims{{0, 0}, {1, 0}}));
  }
}

TEST(ClassicalSS, ZeroDifferentialIsConstant) {
  auto c = graded_complex(1, 3, {{"x", 1, {1}}, {"y", 0, {0}}, {"z", 2, {4}}});
  auto ss = classical_ss(c, 6);
  for (std::int64_t r = 1; r <= 7; ++r)
    for (std::int64_t p = -1; p <= 5; ++p) EXPECT_EQ(ss.page(r, p), ss.page(1, p));
}

TEST(ClassicalSS, InfinityPageSumsToHomology) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomComplexOptions o;
    o.n = 1;
    o.lo = {0};
    o.hi = {5};
    o.prime = seed % 3 ? 2 : 3;
    auto c = random_complex(seed, o);
    auto ss = classical_ss(c, 1);
    DegreeDims total;
    for (std::int64_t p = ss.lo; p <= ss.hi; ++p)
      for (const auto& [deg, dim] : ss.limit_term(p)) total[deg] += dim;
    for (const auto& [deg, dim] : homology_total(c)) EXPECT_EQ(total[deg], dim) << "seed " << seed;
  }
}

TEST(RandomComplex, DeterministicAndValid) {
  RandomComplexOptions o;
  o.lo = {0, 0};
  o.hi = {3, 3};
  o.prime = 5;
  auto a = random_complex(17, o), b = random_complex(17, o);
  EXPECT_EQ(a.to_json(), b.to_json());
  EXPECT_NO_THROW(load_mfc(nlohmann::json::parse(a.to_json().dump())));
  o.max_per_cell = 0;
  EXPECT_EQ(random_complex(17, o).size(), 0u);
}

TEST(RandomComplex, LimitEqualsHomology) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomComplexOptions o;
    o.lo = {0, 0};
    o.hi = {2, 3};
    o.prime = seed % 2 ? 2 : 5;
    o.graded = seed % 5 != 0;
    auto c = random_complex(seed, o);
    EXPECT_EQ(Engine(c).limit(), homology_total(c)) << "seed " << seed;
  }
}
