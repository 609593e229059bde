#include <gtest/gtest.h>

#include "printers.hpp"

#include "rrloc/charformula.hpp"
#include "rrloc/error.hpp"
#include "rrloc/oracle.hpp"

using namespace rrloc;

namespace {

struct DimCase {
  const char* group;
  const char* weight;
  long dim;
  friend void PrintTo(const DimCase& c, std::ostream* os) { *os << c.group << "(" << c.weight << ")"; }
};

// Character from the weight multiplicities, expanded to degree n.
TruncatedSeries character_from_weights(const RootSystem& rs, const DominantWeight& lam, unsigned n) {
  TruncatedSeries out(rs.rank(), n);
  for (const auto& [mu, m] : WeightMultiplicities(rs, lam).character()) {
    Vec form;
    for (long c : mu) form.push_back(c);
    out += exp_linear(form, n) * Rational(m);
  }
  return out;
}

}  // namespace

class WeylDimension : public ::testing::TestWithParam<DimCase> {};

TEST_P(WeylDimension, MatchesKnownValue) {
  const auto c = GetParam();
  const RootSystem rs = build_root_system(c.group);
  const DominantWeight lam(parse_weight(c.weight));
  EXPECT_EQ(weyl_dim(rs, lam), c.dim);
  EXPECT_EQ(WeightMultiplicities(rs, lam).dimension(), c.dim);
}

INSTANTIATE_TEST_SUITE_P(
    Frozen, WeylDimension,
    ::testing::Values(DimCase{"A1", "4", 5}, DimCase{"A2", "1,1", 8}, DimCase{"A2", "2,1", 15},
                      DimCase{"A3", "0,1,0", 6}, DimCase{"A4", "1,1,1,1", 1024}, DimCase{"B2", "1,0", 5},
                      DimCase{"B2", "0,1", 4}, DimCase{"B3", "1,0,0", 7}, DimCase{"B3", "0,0,1", 8},
                      DimCase{"C2", "1,0", 4}, DimCase{"C3", "1,0,0", 6}, DimCase{"C3", "0,0,1", 14},
                      DimCase{"D4", "1,0,0,0", 8}, DimCase{"D4", "0,1,0,0", 28}, DimCase{"G2", "1,0", 7},
                      DimCase{"G2", "0,1", 14}, DimCase{"G2", "1,1", 64}));

TEST(CharacterSeries, AgreesWithWeightMultiplicities) {
  for (const char* g : {"A1", "A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(g);
    for (const char* w : {"1", "2", "0,1", "1,1", "2,0", "1,0,1", "0,2,0"}) {
      const Weight parsed = parse_weight(w);
      if (parsed.size() != rs.rank()) continue;
      const DominantWeight lam(parsed);
      EXPECT_EQ(character_series(rs, lam, 4), character_from_weights(rs, lam, 4)) << g << " " << w;
    }
  }
}

TEST(CharacterSeries, IsWeylInvariant) {
  for (const char* g : {"A2", "B2", "G2"}) {
    const RootSystem rs = build_root_system(g);
    const DominantWeight lam{2, 1};
    const auto ch = character_series(rs, lam, 4);
    for (const auto& w : rs.weyl_group()) EXPECT_EQ(ch.substitute_linear(rs.substitution(w)), ch) << g;
  }
}

TEST(CharacterSeries, FrozenExpansions) {
  EXPECT_EQ(character_series(build_root_system("A1"), DominantWeight{2}, 2).to_string(), "3 + 4 * x1^2");
  EXPECT_EQ(character_series(build_root_system("A2"), DominantWeight{1, 0}, 2).to_string(),
            "3 + 1 * x1^2 + -1 * x1 * x2 + 1 * x2^2");
  EXPECT_EQ(character_series(build_root_system("G2"), DominantWeight{1, 0}, 2).to_string(),
            "7 + 6 * x1^2 + -6 * x1 * x2 + 2 * x2^2");
}

TEST(OrbitVolume, FrozenValuesAndErrors) {
  EXPECT_EQ(orbit_volume(build_root_system("A1"), parse_weight("3")), 3);
  EXPECT_EQ(orbit_volume(build_root_system("A2"), parse_weight("2,1")), 3);
  EXPECT_EQ(orbit_volume(build_root_system("A2"), parse_weight("1/2,1/2")), Rational(1, 8));
  const RootSystem a2 = build_root_system("A2");
  try {
    orbit_volume(a2, parse_weight("1,0"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateOrbit);
  }
  EXPECT_THROW(orbit_volume(a2, parse_weight("1,-1")), Error);
}
