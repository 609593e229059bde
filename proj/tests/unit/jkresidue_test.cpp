#include <gtest/gtest.h>

#include "printers.hpp"

#include "chamber.hpp"
#include "random.hpp"
#include "rrloc/error.hpp"
#include "rrloc/jkresidue.hpp"

using namespace rrloc;

namespace {

RatExpTerm term(const char* num, Vec phase, std::vector<DenominatorFactor> dens) {
  Polynomial numerator = parse_polynomial(num, phase.size());
  return RatExpTerm(std::move(numerator), std::move(phase), std::move(dens));
}

std::vector<LinearForm> forms_of(const std::vector<RatExpTerm>& terms) {
  std::vector<LinearForm> out;
  for (const auto& t : terms)
    for (const auto& d : t.denominators()) out.push_back(d.form);
  return out;
}

Rational residue(const std::vector<RatExpTerm>& terms, const Vec& xi, ResidueOptions opt = {}) {
  return res_cone(terms, build_cone(forms_of(terms), xi), opt).value;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Residue, OneVariableFrozenValues) {
  EXPECT_EQ(residue({term("1", {3}, {{{1}, 2}})}, {1}), 3);
  EXPECT_EQ(residue({term("1", {2}, {{{1}, 3}})}, {1}), 2);
  EXPECT_EQ(residue({term("1", {-2}, {{{1}, 3}})}, {1}), 0);
  EXPECT_EQ(residue({term("x1^2", {1}, {{{1}, 3}})}, {1}), 1);
  // Normalization of 2z: e^{z} / (2z) has residue 1/2.
  EXPECT_EQ(residue({term("1", {1}, {{{2}, 1}})}, {1}), Rational(1, 2));
}

TEST(Residue, TwoVariableFrozenValues) {
  const std::vector<DenominatorFactor> dens{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  for (const Vec& phase : {Vec{1, 1}, Vec{2, 1}, Vec{3, 1}}) EXPECT_EQ(residue({term("1", phase, dens)}, {1, 2}), 1);
  EXPECT_EQ(residue({term("1", {1, 2}, dens)}, {1, 2}), 1);
  EXPECT_EQ(residue({term("1", {-1, -1}, dens)}, {1, 2}), 0);
}

TEST(Residue, ZeroPhaseDecayDecides) {
  // Without an exponential the residues sum to zero once the term decays fast enough.
  EXPECT_EQ(residue({term("1", {0}, {{{1}, 2}})}, {1}), 0);
  EXPECT_EQ(residue({term("x1", {0}, {{{1}, 3}})}, {1}), 0);
  EXPECT_EQ(kind_of([] { residue({term("1", {0}, {{{1}, 1}})}, {1}, {2, 0, {}}); }), ErrorKind::NonGeneric);
  EXPECT_EQ(kind_of([] { residue({term("x1^2", {0}, {{{1}, 1}})}, {1}, {1, 0, {}}); }), ErrorKind::NonGeneric);
}

TEST(Residue, IsLinear) {
  std::mt19937_64 rng(19);
  const std::vector<DenominatorFactor> dens{{{1, 0}, 2}, {{0, 1}, 1}, {{1, 1}, 1}};
  for (int i = 0; i < 10; ++i) {
    const auto p = test::random_polynomial(rng, 2, 3);
    const auto q = test::random_polynomial(rng, 2, 3);
    const Rational a = test::random_rational(rng), b = test::random_rational(rng);
    const Vec phase{2, 1};
    const Rational lhs = residue({RatExpTerm(p * a + q * b, phase, dens)}, {1, 2});
    const Rational rhs = a * residue({RatExpTerm(p, phase, dens)}, {1, 2}) +
                         b * residue({RatExpTerm(q, phase, dens)}, {1, 2});
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Residue, IndependentOfAdmissibleCoordinates) {
  std::mt19937_64 rng(23);
  const std::vector<DenominatorFactor> dens{{{1, 0}, 1}, {{1, 2}, 2}, {{0, 1}, 1}, {{2, 1}, 1}};
  const std::vector<RatExpTerm> terms{term("1 + x1 * x2", {3, 4}, dens)};
  const Cone cone = build_cone(forms_of(terms), {1, 1});
  const Rational reference = res_cone(terms, cone).value;
  int tried = 0, agreed = 0;
  while (tried < 10) {
    const Matrix m = Matrix::from_columns({test::random_vec(rng, 2), test::random_vec(rng, 2)});
    if (m.determinant() == 0 || !coordinates_admissible(cone, m)) continue;
    ++tried;
    try {
      EXPECT_EQ(res_in_coordinates(terms, m), reference);
      ++agreed;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonGeneric);  // a pole collision in these coordinates
    }
  }
  EXPECT_GE(agreed, 5);
}

TEST(Residue, MatchesChamberVolume) {
  // e^{<p,X>} / prod beta(X) is the Laplace transform of the pushforward density.
  const std::vector<Vec> weights{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  for (const Vec& p : {Vec{3, 2}, Vec{5, 7}, Vec{4, 1}, Vec{2, 5}}) {
    std::vector<DenominatorFactor> dens;
    for (const auto& w : weights) dens.push_back({w, 1});
    EXPECT_EQ(residue({RatExpTerm(Polynomial::constant(2, 1), p, dens)}, {1, 1}), cli::chamber_volume(weights, p))
        << to_string(p[0]) << "," << to_string(p[1]);
  }
}

TEST(Residue, SameAnswerForEverySeed) {
  const std::vector<DenominatorFactor> dens{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  const std::vector<RatExpTerm> terms{term("1", {2, 1}, dens)};
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(residue(terms, {1, 2}, {8, seed, {}}), 1);
}

TEST(Residue, Errors) {
  const std::vector<DenominatorFactor> dens{{{1, 0}, 1}, {{0, 1}, 1}};
  EXPECT_EQ(kind_of([&] { build_cone({{1, -1}}, {1, 1}); }), ErrorKind::NonGeneric);
  EXPECT_EQ(kind_of([&] {
              const std::vector<RatExpTerm> t{term("1", {1, 1}, dens)};
              res_cone(t, build_cone(forms_of(t), {1, 1}), {1, 0, Matrix::from_columns({{1, 0}, {0, -1}})});
            }),
            ErrorKind::Input);
}

TEST(RatExpTerm, NormalizesAndMergesDenominators) {
  const RatExpTerm t(Polynomial::constant(1, 1), {1}, {{{2}, 1}, {{-1}, 2}});
  ASSERT_EQ(t.denominators().size(), 1u);
  EXPECT_EQ(t.denominators()[0].multiplicity, 3u);
  EXPECT_EQ(t.numerator().constant_term(), Rational(1, 2));
  auto merged = merge_terms({t, t.scaled(-1)});
  EXPECT_TRUE(merged.empty());
}
