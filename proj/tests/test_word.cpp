#include <gtest/gtest.h>

#include "hss/error.hpp"
#include "hss/word.hpp"

using namespace hss;

namespace {
Word w2(const char* s) { return Word::parse(s, 2); }
}

TEST(WordParse, Tokenizes) {
  EXPECT_EQ(w2("12").letters(), (std::vector<Letter>{Letter::finite(1), Letter::finite(2)}));
  EXPECT_EQ(w2("12121^e2^e").letters(),
            (std::vector<Letter>{Letter::finite(1), Letter::finite(2), Letter::finite(1), Letter::finite(2),
                                 Letter::saturate(1), Letter::extend(), Letter::saturate(2), Letter::extend()}));
  EXPECT_TRUE(w2("").empty());
}

TEST(WordParse, RejectsBadInput) {
  EXPECT_THROW(w2("13"), ParseError);
  EXPECT_THROW(w2("1x"), ParseError);
  EXPECT_THROW(w2("^"), ParseError);
}

TEST(WordParse, DottedTokensForLargeN) {
  const Word w = Word::parse("10.3^.e.11", 11);
  EXPECT_EQ(w.letters(), (std::vector<Letter>{Letter::finite(10), Letter::saturate(3), Letter::extend(),
                                              Letter::finite(11)}));
  EXPECT_EQ(Word::parse(w.to_string(), 11), w);
}

TEST(WordParse, PrintParseRoundTrip) {
  for (const char* s : {"", "1", "12121^e2^e", "2^e1^e", "1^"}) EXPECT_EQ(w2(s).to_string(), s);
}

TEST(Admissibility, Conditions) {
  EXPECT_TRUE(is_admissible(Word::parse("123122^e133313^e111^e", 3)));
  EXPECT_EQ(check_admissible(w2("1e")).condition, 3);
  EXPECT_EQ(check_admissible(w2("1^e1")).condition, 1);
  EXPECT_EQ(check_admissible(w2("1^2")).condition, 2);
  try {
    require_admissible(w2("1e"));
    FAIL();
  } catch (const InadmissibleWord& e) {
    EXPECT_EQ(e.condition(), 3);
    EXPECT_NE(std::string(e.what()).find("condition 3"), std::string::npos);
  }
}

TEST(Finality, Examples) {
  EXPECT_TRUE(is_final(Word::parse("123122^e133313^e111^e", 3)));
  EXPECT_TRUE(is_final(w2("121^e2^e")));
  EXPECT_FALSE(is_final(w2("1^e")));
  EXPECT_FALSE(is_final(w2("12")));
}

TEST(SaturatedSets, Examples) {
  auto s = saturated_sets(w2(""));
  EXPECT_TRUE(s.saturated.empty());
  EXPECT_EQ(s.unsaturated, (std::vector<int>{1, 2}));
  s = saturated_sets(w2("1^e"));
  EXPECT_EQ(s.saturated, (std::vector<int>{1}));
  EXPECT_EQ(s.unsaturated, (std::vector<int>{2}));
  s = saturated_sets(w2("121^e2^e"));
  EXPECT_EQ(s.saturated, (std::vector<int>{1, 2}));
  EXPECT_TRUE(s.unsaturated.empty());
}

TEST(DifferentialData, Examples) {
  auto d = differential_data(w2(""));
  EXPECT_EQ(d.a[0], (IVec{1, 0}));
  EXPECT_EQ(d.delta[1], (IVec{0, 1}));
  d = differential_data(w2("12"));
  EXPECT_EQ(d.a[0], (IVec{2, 0}));
  EXPECT_EQ(d.a[1], (IVec{-1, 2}));
  EXPECT_EQ(d.delta[0], (IVec{2, -1}));
  EXPECT_EQ(d.delta[1], (IVec{-1, 1}));
  for (int r = 1; r <= 6; ++r) {
    const Word w(1, std::vector<Letter>(static_cast<std::size_t>(r - 1), Letter::finite(1)));
    const auto c = differential_data(w);
    EXPECT_EQ(c.a[0], (IVec{r}));
    EXPECT_EQ(c.delta[0], (IVec{1}));
  }
}

TEST(Zonotope, Examples) {
  EXPECT_EQ(b_region(w2("")), (std::set<IVec>{{0, 0}}));
  EXPECT_EQ(b_region(w2("1")), (std::set<IVec>{{0, 0}, {1, 0}}));
  EXPECT_EQ(b_region(w2("12")), (std::set<IVec>{{0, 0}, {1, 0}, {-1, 1}, {0, 1}}));
}

TEST(TMatrix, Examples) {
  EXPECT_EQ(t_matrix(w2("")), IMat::identity(2));
  const IMat t12 = t_matrix(w2("12"));
  EXPECT_EQ(t12.row(0), (IVec{1, 1}));
  EXPECT_EQ(t12.row(1), (IVec{1, 2}));
  const IMat t1212 = t_matrix(w2("1212"));
  EXPECT_EQ(t1212.row(0), (IVec{2, 3}));
  EXPECT_EQ(t1212.row(1), (IVec{3, 5}));
  EXPECT_EQ(t1212, t12 * t12);
}

TEST(UVector, Examples) {
  EXPECT_EQ(u_vec(w2("")), (IVec{0, 0}));
  EXPECT_EQ(u_vec(w2("1")), (IVec{1, 0}));
  EXPECT_EQ(u_vec(w2("12")), (IVec{1, 2}));
}

TEST(Lattice, Examples) {
  EXPECT_TRUE(lattice(w2("1212")).empty());
  EXPECT_EQ(lattice(w2("1^e")), (std::vector<IVec>{{1, 0}}));
  EXPECT_EQ(lattice(w2("12121^e2^e")), (std::vector<IVec>{{1, 0}, {0, 1}}));
  EXPECT_EQ(lattice(Word::parse("123122^e133313^e111^e", 3)).size(), 3u);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(w2("111^e")), w2("1^e"));
  EXPECT_EQ(normalize(w2("12")), w2("12"));
  EXPECT_EQ(normalize(w2("1^e222^e")), w2("1^e2^e"));
}

TEST(WordGeometry, DeltaColumnsAreUnimodular) {
  // Every plain word of length <= 6 over [3].
  std::vector<Word> frontier{Word(3)};
  for (int len = 0; len <= 6; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      EXPECT_EQ(determinant(IMat::from_columns(differential_data(w).delta)), 1) << w.to_string();
      if (len < 6)
        for (int j = 1; j <= 3; ++j) next.push_back(w.then(Letter::finite(j)));
    }
    frontier = std::move(next);
  }
}
