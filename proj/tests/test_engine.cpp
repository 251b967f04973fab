#include <gtest/gtest.h>

#include <random>

#include "hss/engine.hpp"
#include "hss/error.hpp"
#include "hss/oracle.hpp"
#include "hss/verify.hpp"
#include "support.hpp"

using namespace hss;
using hss::fixture::graded_complex;

namespace {

// The boundary of a square: a at the origin, edges b, c, face s, plus a stray cycle t.
MultifilteredComplex square() {
  return graded_complex(
      2, 3, {{"a", 0, {0, 0}}, {"b", 1, {1, 0}}, {"c", 1, {0, 1}}, {"s", 2, {1, 1}}, {"t", 1, {2, 2}}},
      {{"b", "a", 1}, {"c", "a", 1}, {"s", "b", 1}, {"s", "c", 2}});
}

DegreeDims dd(std::initializer_list<std::pair<const std::int64_t, std::size_t>> v) { return DegreeDims(v); }

Word w2(const char* s) { return Word::parse(s, 2); }

}  // namespace

TEST(ETerm, ZeroDifferentialCountsGenerators) {
  auto c = graded_complex(2, 2, {{"x", 0, {0, 0}}, {"y", 0, {1, 0}}, {"z", 1, {1, 1}}});
  Engine e(c);
  const Box box = c.working_box({0, 0});
  auto p = Downset::everything(box);
  auto q = lex_downset({0, 0}, IMat::identity(2), {0, 1}, box, false);
  EXPECT_EQ(e.dims(e.e_term(p, q).value), dd({{0, 1}, {1, 1}}));
  EXPECT_EQ(e.dims(e.e_term(q, q).value), dd({{0, 0}, {1, 0}}));
}

TEST(ETerm, AcyclicPairVanishes) {
  auto c = graded_complex(2, 2, {{"x", 1, {1, 0}}, {"y", 0, {0, 0}}}, {{"x", "y", 1}});
  Engine e(c);
  const Box box = c.working_box({0, 0});
  EXPECT_EQ(e.dims(e.e_term(Downset::everything(box), Downset::empty(box)).value), dd({{0, 0}, {1, 0}}));
}

TEST(STerm, SpecialQuads) {
  auto c = square();
  Engine e(c);
  const Box box = c.working_box({0, 0});
  auto all = Downset::everything(box), none = Downset::empty(box);
  EXPECT_EQ(e.dims(e.s_term({all, all, none, none}).value), homology_total(c));
  auto p = lex_downset({1, 0}, IMat::identity(2), {0, 1}, box, false);
  auto q = lex_downset({0, 1}, IMat::identity(2), {0, 1}, box, false);
  EXPECT_EQ(e.s_term({p, p, q, q}).value, e.e_term(p, q).value);
}

TEST(Page, FirstPageIsLocalHomology) {
  auto c = square();
  Engine e(c);
  for (const IVec& p : {IVec{0, 0}, IVec{1, 0}, IVec{1, 1}, IVec{2, 2}, IVec{3, -1}}) {
    std::size_t count = 0;
    for (const auto& g : c.generators()) count += g.position == p;
    std::size_t total = 0;
    for (const auto& [deg, dim] : e.page(Word(2), p).dims) total += dim;
    EXPECT_EQ(total, count) << to_string(p);
  }
}

TEST(Page, FinalWordsGiveHomology) {
  auto c = square();
  Engine e(c);
  EXPECT_EQ(homology_total(c), dd({{0, 0}, {1, 1}, {2, 0}}));
  for (const char* s : {"1^e2^e", "2^e1^e", "12121^e2^e", "12112^e1^e"})
    for (const IVec& p : {IVec{0, 0}, IVec{5, -3}}) EXPECT_EQ(e.page(w2(s), p).dims, homology_total(c)) << s;
  EXPECT_EQ(e.limit(), homology_total(c));
}

TEST(Page, PositionIsReducedModuloTheLattice) {
  auto c = square();
  Engine e(c);
  EXPECT_EQ(e.page(w2("1^e"), {3, 1}).position_class, (IVec{0, 1}));
  EXPECT_EQ(e.page(w2("1^e2^e"), {3, 1}).position_class, (IVec{0, 0}));
  EXPECT_EQ(page_report(c, e.page(w2("1^e"), {3, 1})).dump(),
            R"({"word":"1^e","position":[0,1],"lattice":[[1,0]],"dims":{"0":0,"1":0,"2":0}})");
}

TEST(Page, RejectsBadInput) {
  auto c = square();
  Engine e(c);
  EXPECT_THROW(e.page(w2("1e"), {0, 0}), InadmissibleWord);
  EXPECT_THROW(e.page(Word::parse("1", 3), {0, 0}), DimensionMismatch);
}

TEST(Differential, ZeroDifferentialGivesZeroMaps) {
  auto c = graded_complex(2, 2, {{"x", 0, {0, 0}}, {"y", 1, {1, 0}}, {"z", 1, {0, 1}}});
  Engine e(c);
  for (const char* s : {"", "1", "12"}) {
    for (int j = 1; j <= 2; ++j) {
      auto d = e.page_differential(w2(s), {0, 0}, j);
      EXPECT_TRUE(d.incoming.is_zero());
      EXPECT_TRUE(d.outgoing.is_zero());
      EXPECT_EQ(e.saturate(w2(s), {0, 0}, j).dims, e.page(w2(s), {0, 0}).dims);
    }
  }
}

TEST(Differential, SquareFirstDifferentials) {
  auto c = square();
  Engine e(c);
  // d1 in direction 1 from (1,0) to (0,0) sends b to a.
  auto d = e.page_differential(Word(2), {0, 0}, 1);
  EXPECT_EQ(d.incoming.rows(), 1u);
  EXPECT_EQ(d.incoming.cols(), 1u);
  EXPECT_EQ(d.incoming.at(0, 0), 1u);
  EXPECT_EQ(e.page(w2("1"), {0, 0}).dims, dd({{0, 0}, {1, 0}, {2, 0}}));
}

TEST(Extension, SingleGeneratorHasOnePiece) {
  auto c = graded_complex(2, 2, {{"x", 0, {2, 1}}});
  Engine e(c);
  for (int j = 1; j <= 2; ++j) {
    const auto rep = e.extension_filtration(Word(2), {0, 0}, j);
    std::size_t nonzero = 0;
    for (const auto& g : rep.graded_pieces) nonzero += g.at(0) != 0;
    std::size_t total = 0;
    for (const auto& g : rep.graded_pieces) total += g.at(0);
    EXPECT_LE(nonzero, 1u);
    EXPECT_EQ(total, rep.total.at(0));
  }
}

TEST(Extension, ZeroDifferentialInterpolatesSliceCounts) {
  auto c = graded_complex(2, 2, {{"x", 0, {0, 0}}, {"y", 0, {1, 0}}, {"z", 0, {3, 0}}, {"u", 0, {0, 1}}});
  Engine e(c);
  const auto rep = e.extension_filtration(Word(2), {0, 0}, 1);
  EXPECT_EQ(rep.total.at(0), 3u);
  for (std::size_t i = 0; i + 1 < rep.filtration.size(); ++i) {
    EXPECT_LE(rep.filtration[i].at(0), rep.filtration[i + 1].at(0));
    EXPECT_LE(rep.graded_pieces[i].at(0), 1u);
  }
}

TEST(Engine, SaturationStabilizesOnRandomComplexes) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    RandomComplexOptions o;
    o.lo = {0, 0};
    o.hi = {3, 3};
    o.prime = seed % 2 ? 2 : 5;
    auto c = random_complex(seed, o);
    Engine e(c);
    for (const char* s : {"", "1", "2", "12"}) {
      for (int j = 1; j <= 2; ++j) {
        const auto k = e.stabilization_index(w2(s), {1, 1}, j);
        EXPECT_EQ(e.dims(e.finite_stage(w2(s), {1, 1}, j, k).value), e.saturate(w2(s), {1, 1}, j).dims);
      }
    }
  }
}

TEST(Engine, DualAlgorithmsAgreeOnPageQuads) {
  RandomComplexOptions o;
  o.lo = {0, 0};
  o.hi = {2, 2};
  auto c = random_complex(99, o);
  Engine e(c);
  for (const auto& w : admissible_words(2, 3)) {
    const auto quad = e.page_quad(w, {1, 0});
    EXPECT_EQ(e.s_term(quad, STermAlgorithm::ClosedForm).value, e.s_term(quad, STermAlgorithm::ViaMaps).value)
        << w.to_string();
  }
}
