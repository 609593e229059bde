#include <gtest/gtest.h>

#include "printers.hpp"

#include "rrloc/charformula.hpp"
#include "rrloc/oracle.hpp"

using namespace rrloc;

TEST(WeightMultiplicities, FrozenValues) {
  const RootSystem a2 = build_root_system("A2");
  WeightMultiplicities adjoint(a2, DominantWeight{1, 1});
  EXPECT_EQ(adjoint.multiplicity({0, 0}), 2);
  EXPECT_EQ(adjoint.multiplicity({1, 1}), 1);
  EXPECT_EQ(adjoint.multiplicity({-1, 2}), 1);
  EXPECT_EQ(adjoint.multiplicity({2, 2}), 0);
  EXPECT_EQ(adjoint.character().size(), 7u);

  const RootSystem g2 = build_root_system("G2");
  WeightMultiplicities g2_adjoint(g2, DominantWeight{0, 1});
  EXPECT_EQ(g2_adjoint.multiplicity({0, 0}), 2);
  EXPECT_EQ(g2_adjoint.dimension(), 14);
}

TEST(WeightMultiplicities, CharacterIsWeylInvariant) {
  for (const char* g : {"A2", "B2", "G2", "A3"}) {
    const RootSystem rs = build_root_system(g);
    const DominantWeight lam(Weight(Vec(rs.rank(), Rational(2))));
    WeightMultiplicities wm(rs, lam);
    const Character ch = wm.character();
    for (const auto& w : rs.weyl_group())
      for (const auto& [mu, m] : ch) {
        Vec labels;
        for (long c : mu) labels.push_back(c);
        const Labels image = to_labels(Weight(rs.labels(weyl_act(w, rs.ambient(Weight(labels))))));
        ASSERT_TRUE(ch.count(image)) << g;
        EXPECT_EQ(ch.at(image), m);
      }
  }
}

TEST(TensorOracle, FrozenMultiplicities) {
  const RootSystem a1 = build_root_system("A1");
  EXPECT_EQ(tensor_multiplicity_oracle(a1, {DominantWeight{2}, DominantWeight{2}, DominantWeight{2}}, DominantWeight{2}),
            3);
  EXPECT_EQ(tensor_multiplicity_oracle(a1, {DominantWeight{1}, DominantWeight{1}}, DominantWeight{1}), 0);
  const RootSystem a2 = build_root_system("A2");
  EXPECT_EQ(tensor_multiplicity_oracle(a2, {DominantWeight{1, 1}, DominantWeight{1, 1}}, DominantWeight{1, 1}), 2);
  EXPECT_EQ(tensor_multiplicity_oracle(a2, {DominantWeight{1, 0}, DominantWeight{1, 0}, DominantWeight{1, 0}},
                                       DominantWeight{0, 0}),
            1);
  const RootSystem g2 = build_root_system("G2");
  EXPECT_EQ(tensor_multiplicity_oracle(g2, {DominantWeight{1, 0}, DominantWeight{1, 0}}, DominantWeight{0, 1}), 1);
}

TEST(TensorOracle, DimensionsAddUp) {
  // dim(V x W) = sum_nu c_nu dim V_nu
  const RootSystem b2 = build_root_system("B2");
  const std::vector<DominantWeight> factors{DominantWeight{1, 0}, DominantWeight{1, 1}};
  const Integer total = weyl_dim(b2, factors[0]) * weyl_dim(b2, factors[1]);
  Integer sum = 0;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b) {
      const DominantWeight nu{a, b};
      sum += tensor_multiplicity_oracle(b2, factors, nu) * weyl_dim(b2, nu);
    }
  EXPECT_EQ(sum, total);
}
