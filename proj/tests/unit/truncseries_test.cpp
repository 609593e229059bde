#include <gtest/gtest.h>

#include "printers.hpp"

#include "random.hpp"
#include "rrloc/error.hpp"
#include "rrloc/truncseries.hpp"

using namespace rrloc;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t vars, unsigned n, bool constant_term) {
  Polynomial p = test::random_polynomial(rng, vars, n, 6);
  p -= Polynomial::constant(vars, p.constant_term());
  if (constant_term) p += Polynomial::constant(vars, 1 + test::random_rational(rng) * test::random_rational(rng));
  return TruncatedSeries(p, n);
}

}  // namespace

TEST(TruncatedSeries, ExpOfNegationIsInverse) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    const auto s = random_series(rng, 2, 5, false);
    EXPECT_EQ(ts_invert(ts_exp(s)), ts_exp(-s));
    EXPECT_EQ(ts_exp(s) * ts_exp(-s), TruncatedSeries::constant(2, 1, 5));
  }
}

TEST(TruncatedSeries, ExpIsAdditive) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_series(rng, 3, 4, false);
    const auto b = random_series(rng, 3, 4, false);
    EXPECT_EQ(ts_exp(a + b), ts_exp(a) * ts_exp(b));
  }
}

TEST(TruncatedSeries, InverseIsTwoSided) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 15; ++i) {
    const auto s = random_series(rng, 2, 6, true);
    if (s.constant_term() == 0) continue;
    EXPECT_EQ(s * ts_invert(s), TruncatedSeries::constant(2, 1, 6));
  }
  EXPECT_THROW(ts_invert(random_series(rng, 2, 3, false)), Error);
}

TEST(TruncatedSeries, ExpLinearMatchesExpOfForm) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const LinearForm f = test::random_vec(rng, 3);
    EXPECT_EQ(exp_linear(f, 6), ts_exp(TruncatedSeries(Polynomial::linear(f), 6)));
  }
}

TEST(TruncatedSeries, ToddTimesItsReciprocalIsOne) {
  // z/(1-e^{-z}) * (1-e^{-z})/z == 1 for every linear form z.
  std::mt19937_64 rng(13);
  for (int i = 0; i < 8; ++i) {
    const LinearForm f = test::random_vec(rng, 2, 1, 3);
    const unsigned n = 7;
    const auto z = TruncatedSeries(Polynomial::linear(f), n + 1);
    const auto one_minus = TruncatedSeries::constant(2, 1, n + 1) - ts_exp(-z);
    const auto ratio = ts_divide_exact(one_minus, Polynomial::linear(f));
    EXPECT_EQ((todd_linear(f, n) * ratio).truncated(n), TruncatedSeries::constant(2, 1, n));
  }
}

TEST(TruncatedSeries, SinhRatioIsEvenAndRelatedToTodd) {
  const auto s = sinh_ratio_coefficients(9);
  for (unsigned k = 1; k < s.size(); k += 2) EXPECT_EQ(s[k], 0);
  EXPECT_EQ(s[2], Rational(1, 24));
  // todd(z) = e^{z/2} / sinh_ratio(z)
  const LinearForm z{1};
  const auto lhs = todd_linear(z, 8) * sinh_ratio(z, 8);
  EXPECT_EQ(lhs, exp_linear({Rational(1, 2)}, 8));
  const auto t = todd_coefficients(4);
  EXPECT_EQ(t[1], Rational(1, 2));
  EXPECT_EQ(t[2], Rational(1, 12));
  EXPECT_EQ(t[3], 0);
  EXPECT_EQ(t[4], Rational(-1, 720));
}

TEST(TruncatedSeries, ExactDivisionLowersKnownDegree) {
  const auto num = TruncatedSeries(parse_polynomial("x1^2 + x1^3", 1), 5);
  const auto q = ts_divide_exact(num, parse_polynomial("x1", 1));
  EXPECT_EQ(q.trunc_degree(), 4u);
  EXPECT_EQ(q.polynomial(), parse_polynomial("x1 + x1^2", 1));
  try {
    ts_divide_exact(TruncatedSeries(parse_polynomial("1 + x1", 1), 4), parse_polynomial("x1", 1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExactDivision);
  }
}

TEST(TruncatedSeries, ProductKeepsSmallerTruncation) {
  const auto a = TruncatedSeries(parse_polynomial("1 + x1", 1), 3);
  const auto b = TruncatedSeries(parse_polynomial("1 + x1^2", 1), 5);
  EXPECT_EQ((a * b).trunc_degree(), 3u);
  EXPECT_EQ(parse_series(a.to_string(), 1, 3), a);
}

class TopIntegral : public ::testing::TestWithParam<const char*> {};

TEST_P(TopIntegral, RootProductIntegratesToWeylOrder) {
  const RootSystem rs = build_root_system(GetParam());
  const Polynomial top = positive_root_product(rs);
  EXPECT_EQ(top.degree(), static_cast<int>(rs.num_positive_roots()));
  EXPECT_EQ(gt_integrate(rs, top), Rational(static_cast<long>(rs.weyl_group().size())));
  // Anything below top degree integrates to zero.
  EXPECT_EQ(gt_integrate(rs, Polynomial::constant(rs.rank(), 5)), 0);
}

INSTANTIATE_TEST_SUITE_P(SmallRank, TopIntegral, ::testing::Values("A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"));
