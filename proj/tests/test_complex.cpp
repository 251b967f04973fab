#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hss/complex.hpp"
#include "hss/error.hpp"
#include "support.hpp"

using namespace hss;
using hss::fixture::graded_complex;

namespace {

MultifilteredComplex from_text(const std::string& text) { return load_mfc(nlohmann::json::parse(text)); }

}  // namespace

TEST(Complex, EmptyIsValid) {
  auto c = from_text(R"({"n":2,"characteristic":3,"generators":[],"differential":[]})");
  EXPECT_EQ(c.size(), 0u);
  EXPECT_EQ(c.support_box().size(), 1u);
}

TEST(Complex, MonotoneDifferentialAccepted) {
  auto c = graded_complex(2, 2, {{"x", 1, {1, 0}}, {"y", 0, {0, 0}}}, {{"x", "y", 1}});
  EXPECT_EQ(c.differential().images().at(0, 1), 1u);
}

TEST(Complex, Violations) {
  EXPECT_THROW(graded_complex(2, 2, {{"x", 1, {0, 0}}, {"y", 0, {1, 0}}}, {{"x", "y", 1}}), ValidationError);
  EXPECT_THROW(graded_complex(1, 2, {{"x", 1, {0}}, {"y", 1, {0}}}, {{"x", "y", 1}}), ValidationError);
  EXPECT_THROW(graded_complex(1, 3, {{"x", 1, {0}}, {"y", 0, {0}}}, {{"x", "y", 3}}), ValidationError);
  EXPECT_THROW(graded_complex(1, 3, {{"x", 1, {0}}, {"y", 0, {0}}}, {{"x", "y", 1}, {"x", "y", 2}}),
               ValidationError);
  EXPECT_THROW(graded_complex(1, 2, {{"x", 1, {0}}, {"x", 0, {0}}}), ValidationError);
  EXPECT_THROW(graded_complex(1, 2, {{"x", 1, {0, 0}}}), std::exception);
  EXPECT_THROW(graded_complex(1, 4, {{"x", 1, {0}}}), ValidationError);
  // d∘d ≠ 0: x -> y -> z with both coefficients nonzero.
  EXPECT_THROW(graded_complex(1, 2, {{"x", 2, {0}}, {"y", 1, {0}}, {"z", 0, {0}}}, {{"x", "y", 1}, {"y", "z", 1}}),
               ValidationError);
}

TEST(Complex, ParseErrorsCarryPosition) {
  const auto path = std::filesystem::temp_directory_path() / "hss_bad_complex.json";
  std::ofstream(path) << "{\"n\": 2, \"characteristic\": }";
  try {
    load_mfc_file(path);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(from_text(R"({"n":2,"characteristic":2})"), UserError);
  EXPECT_THROW(load_mfc_file("/nonexistent/complex.json"), UserError);
}

TEST(Complex, FiltrationSubspaces) {
  auto c = graded_complex(2, 2, {{"x", 1, {1, 0}}, {"y", 0, {0, 0}}, {"z", 0, {0, 2}}}, {{"x", "y", 1}});
  const Box box = c.working_box({0, 0});
  EXPECT_EQ(c.filtration_subspace(Downset::empty(box)).dim(), 0u);
  EXPECT_EQ(c.filtration_subspace(Downset::everything(box)).dim(), 3u);
  auto d = lex_downset({0, 1}, IMat::identity(2), {0, 1}, box, false);
  EXPECT_EQ(c.mask(d), (std::vector<bool>{false, true, false}));
}

TEST(Complex, UngradedDimsAreReportedAsTotal) {
  auto c = from_text(R"({"n":1,"characteristic":2,
    "generators":[{"id":"a","position":[0]},{"id":"b","position":[1]}],"differential":[]})");
  EXPECT_FALSE(c.graded());
  const auto j = c.dims_json(c.graded_dims(Subspace::full(c.field(), 2)));
  EXPECT_EQ(j.dump(), R"({"total":2})");
}

TEST(Complex, JsonRoundTrip) {
  auto c = graded_complex(2, 5, {{"x", 1, {1, 0}}, {"y", 0, {0, 0}}}, {{"x", "y", 3}});
  auto back = load_mfc(nlohmann::json::parse(c.to_json().dump()));
  EXPECT_EQ(back.to_json(), c.to_json());
}
