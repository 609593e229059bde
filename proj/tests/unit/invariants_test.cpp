#include <gtest/gtest.h>

#include "printers.hpp"

#include "random.hpp"
#include "rrloc/error.hpp"
#include "rrloc/invariants.hpp"

using namespace rrloc;

namespace {

struct DegreeCase {
  const char* group;
  std::vector<unsigned> degrees;
  friend void PrintTo(const DegreeCase& c, std::ostream* os) { *os << c.group; }
};

class InvariantDegrees : public ::testing::TestWithParam<DegreeCase> {};

}  // namespace

TEST_P(InvariantDegrees, MatchExponentsPlusOne) {
  const auto c = GetParam();
  const RootSystem rs = build_root_system(c.group);
  const auto basis = basic_invariants(rs, c.degrees.back());
  EXPECT_EQ(basis.degrees, c.degrees);
  for (const auto& g : basis.generators) EXPECT_EQ(reynolds(rs, g), g);
}

INSTANTIATE_TEST_SUITE_P(Frozen, InvariantDegrees,
                         ::testing::Values(DegreeCase{"A1", {2}}, DegreeCase{"A2", {2, 3}},
                                           DegreeCase{"B2", {2, 4}}, DegreeCase{"G2", {2, 6}},
                                           DegreeCase{"A3", {2, 3, 4}}),
                         [](const auto& info) { return std::string(info.param.group); });

TEST(Invariants, ReynoldsIsAProjection) {
  std::mt19937_64 rng(31);
  const RootSystem rs = build_root_system("B2");
  for (int i = 0; i < 5; ++i) {
    const auto p = test::random_polynomial(rng, 2, 4);
    const auto avg = reynolds(rs, p);
    EXPECT_EQ(reynolds(rs, avg), avg);
    for (const auto& w : rs.weyl_group()) EXPECT_EQ(avg.substitute_linear(rs.substitution(w)), avg);
  }
}

TEST(Invariants, ExpressionReproducesPolynomial) {
  std::mt19937_64 rng(5);
  const RootSystem rs = build_root_system("A2");
  const auto basis = basic_invariants(rs, 6);
  for (int i = 0; i < 5; ++i) {
    const auto inv = reynolds(rs, test::random_polynomial(rng, 2, 6));
    const auto expr = express_in_invariants(basis, inv, 6);
    EXPECT_EQ(expr.compose(basis.generators), inv);
  }
}

TEST(Invariants, NonInvariantIsRejected) {
  const RootSystem rs = build_root_system("A2");
  const auto basis = basic_invariants(rs, 3);
  try {
    express_in_invariants(basis, parse_polynomial("x1", 2), 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GeneratorDeficiency);
  }
}

TEST(Invariants, WeightedMonomials) {
  const auto ms = weighted_monomials({2, 3}, 6);
  EXPECT_EQ(ms.size(), 2u);  // a^3 and b^2
  EXPECT_TRUE(weighted_monomials({2, 4}, 5).empty());
}
