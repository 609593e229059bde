#include <gtest/gtest.h>

#include "printers.hpp"

#include "rrloc/error.hpp"
#include "rrloc/io.hpp"

using namespace rrloc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Io, ParsesResidueProblem) {
  const auto p = parse_jk_problem(R"({"vars": 2, "xi": [1, "1/2"],
    "terms": [{"num": "1 + x1", "phase": ["3/2", 1], "dens": [[[2, 0], 1], [[0, 1], 2]]}],
    "coords": [[1, 0], [0, 1]]})");
  EXPECT_EQ(p.vars, 2u);
  ASSERT_EQ(p.terms.size(), 1u);
  EXPECT_EQ(p.terms[0].phase()[0], Rational(3, 2));
  EXPECT_EQ(p.terms[0].denominators().size(), 2u);
  EXPECT_EQ(p.xi[1], Rational(1, 2));
  ASSERT_TRUE(p.coords.has_value());
  EXPECT_EQ(*p.coords, Matrix::identity(2));
}

TEST(Io, RejectsMalformedProblems) {
  for (const char* text : {"{", "[]", R"({"vars": 0, "terms": [], "xi": []})",
                           R"({"vars": 1, "terms": [{"phase": [1], "dens": [[[1], 0]]}], "xi": [1]})",
                           R"({"vars": 1, "terms": [{"phase": [1.5], "dens": []}], "xi": [1]})",
                           R"({"vars": 2, "terms": [], "xi": [1]})"}) {
    EXPECT_EQ(kind_of([&] { parse_jk_problem(text); }), ErrorKind::Input) << text;
  }
}

TEST(Io, FixedPointsRoundTrip) {
  const RootSystem a2 = build_root_system("A2");
  const auto pts = product_fixed_data(a2, {Weight(Vec{1, 1}), Weight(Vec{2, 1})});
  const auto back = parse_fixed_points(fixed_points_to_json(pts));
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(back[i].label, pts[i].label);
    EXPECT_EQ(back[i].moment, pts[i].moment);
    EXPECT_EQ(back[i].tangent_weights, pts[i].tangent_weights);
  }
}

TEST(Io, ParsesShippedFixtures) {
  const auto f = parse_fibration_fixture(
      read_text_file(std::filesystem::path(RRLOC_FIXTURE_DIR) / "su2_three_minimal.json"));
  EXPECT_EQ(f.group, "A1");
  EXPECT_EQ(f.ks.size(), 6u);
  EXPECT_EQ(f.fixed_points.size(), 8u);
  ASSERT_TRUE(f.base.has_value());
  EXPECT_EQ(f.base->dimension, 0u);
  const auto c = parse_fibration_fixture(
      read_text_file(std::filesystem::path(RRLOC_FIXTURE_DIR) / "calibration_su2.json"));
  EXPECT_TRUE(c.calibration);
  EXPECT_EQ(c.expected, 2);
}

TEST(Io, CalibrationFixtureNeedsExpectedValue) {
  EXPECT_EQ(kind_of([] {
              parse_fibration_fixture(R"({"name": "x", "group": "A1", "level": [1], "k": [1],
                "fixed_points": [], "calibration": true})");
            }),
            ErrorKind::Input);
  EXPECT_EQ(kind_of([] { read_text_file("/nonexistent/file.json"); }), ErrorKind::Input);
}
