#include <gtest/gtest.h>

#include <numeric>

#include "hss/error.hpp"
#include "hss/planner.hpp"

using namespace hss;

namespace {
Word w2(const char* s) { return Word::parse(s, 2); }
}

TEST(NormalVector, Examples) {
  EXPECT_EQ(normal_vector(w2("12121^e2^e")), (IVec{3, 5}));
  EXPECT_EQ(normal_vector(w2("12112^e1^e")), (IVec{3, 5}));
  EXPECT_EQ(normal_vector(w2("2^e1^e")), (IVec{1, 0}));
  EXPECT_THROW(normal_vector(w2("12")), UserError);
}

TEST(PlanWord, WorkedExamples) {
  const Plan a = plan_word({3, 5}, 1);
  EXPECT_EQ(a.omega, w2("12121^e2^e"));
  EXPECT_EQ(a.trace, (std::vector<int>{2, 1, 2, 1}));
  const Plan b = plan_word({3, 5}, 2);
  EXPECT_EQ(b.omega, w2("12112^e1^e"));
  EXPECT_EQ(b.trace, (std::vector<int>{1, 1, 2, 1}));
  EXPECT_EQ(plan_word({1, 0}, 2).omega, w2("2^e1^e"));
}

TEST(PlanWord, RejectsBadNormals) {
  EXPECT_THROW(plan_word({4, 6}, 1), ValidationError);
  EXPECT_THROW(plan_word({1, 0}, 1), ValidationError);
  EXPECT_THROW(plan_word({-1, 2}, 1), ValidationError);
  EXPECT_THROW(plan_word({3, 5}, 3), ValidationError);
}

TEST(PlanWord, FamilyInK) {
  for (std::int64_t k = 0; k <= 3; ++k) {
    const Plan p = plan_word({2, 7}, 1, k);
    EXPECT_EQ(normal_vector(p.omega), (IVec{2, 7}));
    EXPECT_EQ(normalize(p.omega), plan_word({2, 7}, 1).omega);
  }
}

TEST(ContinuedFraction, Examples) {
  auto cf = continued_fraction({3, 5});
  EXPECT_EQ(cf.digits, (std::vector<std::int64_t>{1, 1, 2}));
  ASSERT_TRUE(cf.alternate);
  EXPECT_EQ(*cf.alternate, (std::vector<std::int64_t>{1, 1, 1, 1}));
  cf = continued_fraction({1, 1});
  EXPECT_EQ(cf.digits, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(*cf.alternate, (std::vector<std::int64_t>{0, 1}));
  EXPECT_TRUE(continued_fraction({0, 1}).infinite);
  EXPECT_EQ(tau_from_digits({1, 1, 2}), w2("1211"));
  EXPECT_EQ(tau_from_digits({1, 1, 1, 1}), w2("1212"));
}

TEST(ContinuedFraction, AgreesWithRowSubtraction) {
  for (std::int64_t x = 0; x <= 30; ++x)
    for (std::int64_t y = 0; y <= 30; ++y) {
      if (std::gcd(x, y) != 1) continue;
      for (int j1 = 1; j1 <= 2; ++j1) {
        if ((j1 == 1 && x == 1 && y == 0) || (j1 == 2 && x == 0 && y == 1)) continue;
        const Plan p = plan_word({x, y}, j1);
        EXPECT_EQ(tau_from_continued_fraction({x, y}, j1), p.tau);
        EXPECT_EQ(normal_vector(p.omega), (IVec{x, y}));
        EXPECT_TRUE(is_final(p.omega));
      }
    }
}

TEST(Fibonacci, MatchesForSmallK) {
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(fibonacci_check(k), fibonacci_matrix(k));
  EXPECT_EQ(fibonacci_matrix(2).row(1), (IVec{3, 5}));
}
