#include <gtest/gtest.h>

#include "printers.hpp"

#include "chamber.hpp"
#include "rrloc/error.hpp"

using namespace rrloc;
using rrloc::cli::chamber_volume;

TEST(ChamberVolume, Basis) {
  EXPECT_EQ(chamber_volume({{1, 0}, {0, 1}}, {2, 3}), 1);
  EXPECT_EQ(chamber_volume({{1, 0}, {0, 1}}, {-1, 3}), 0);
  EXPECT_EQ(chamber_volume({{2, 0}, {1, 1}}, {3, 1}), Rational(1, 2));
}

TEST(ChamberVolume, ThreeWeights) {
  // t1 e1 + t2 e2 + t3 (e1 + e2) = p: t3 ranges over [0, min(p)].
  EXPECT_EQ(chamber_volume({{1, 0}, {0, 1}, {1, 1}}, {2, 1}), 1);
  EXPECT_EQ(chamber_volume({{1, 0}, {0, 1}, {1, 1}}, {5, 3}), 3);
}

TEST(ChamberVolume, FourWeightsIsPiecewisePolynomial) {
  const std::vector<Vec> w{{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  // Homogeneous of degree n - 2 = 2 in p.
  for (const Vec& p : {Vec{3, 2}, Vec{2, 5}, Vec{4, 1}}) EXPECT_EQ(chamber_volume(w, Rational(3) * p), 9 * chamber_volume(w, p));
  EXPECT_GT(chamber_volume(w, {3, 2}), 0);
}

TEST(ChamberVolume, RejectsBadInput) {
  EXPECT_THROW(chamber_volume({{1, 0}}, {1, 1}), Error);
  EXPECT_THROW(chamber_volume({{1, 1}, {2, 2}}, {1, 1}), Error);
  EXPECT_THROW(chamber_volume({{1, 0}, {-1, 0}, {0, 1}}, {1, 1}), Error);
}
