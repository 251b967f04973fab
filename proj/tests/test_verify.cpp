#include <gtest/gtest.h>

#include "hss/verify.hpp"

using namespace hss;

TEST(Verify, DeterministicSuitesPass) {
  EXPECT_TRUE(word_lemma_suite(5, 3).passed());
  EXPECT_TRUE(worked_values_suite().passed());
  EXPECT_TRUE(planner_suite(8).passed());
}

TEST(Verify, SmallRandomRunPassesAndIsReproducible) {
  auto o = VerifyOptions::scaled(123, 2);
  o.max_word_length = 3;
  const auto a = verification_summary(run_verification(o));
  const auto b = verification_summary(run_verification(o));
  EXPECT_TRUE(a["passed"].get<bool>()) << a.dump(2);
  EXPECT_EQ(a, b);
}

TEST(Verify, ZeroTrialsRunsOnlyEnumeratedSuites) {
  const auto results = run_verification(VerifyOptions::scaled(1, 0));
  EXPECT_EQ(results.size(), 3u);
}

TEST(Verify, InjectedFaultIsDetected) {
  auto o = VerifyOptions::scaled(5, 1);
  o.max_word_length = 2;
  o.fault = Fault::HomologyOffByOne;
  const auto main = main_theorem_suite(o);
  EXPECT_FALSE(main.passed());
  ASSERT_FALSE(main.failures.empty());
  EXPECT_NE(main.failures.front().instance.find("\"seed\""), std::string::npos);
  EXPECT_FALSE(classical_suite(o).passed());
}

TEST(Verify, HelpersProduceValidObjects) {
  for (const auto& w : admissible_words(2, 3)) EXPECT_TRUE(is_admissible(w));
  EXPECT_EQ(plain_words(2, 7).size(), 255u);
  std::mt19937_64 rng(1);
  const Box box({0, 0}, {3, 3});
  for (int i = 0; i < 50; ++i) EXPECT_TRUE(random_downset(rng, box, 2).is_downward_closed());
}
