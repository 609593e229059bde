#include <gtest/gtest.h>

#include "printers.hpp"

#include "rrloc/error.hpp"
#include "rrloc/rational.hpp"

using namespace rrloc;

TEST(Rational, TextRoundTrip) {
  for (const char* s : {"0", "7", "-3", "1/2", "-5/3", "12/7"}) EXPECT_EQ(to_string(parse_rational(s)), s);
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
  EXPECT_EQ(to_string(parse_rational("6/3")), "2");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* s : {"", "1/0", "abc", "1.5", "1//2", "2/"}) {
    EXPECT_THROW(parse_rational(s), Error) << s;
  }
}

TEST(Rational, ParsesLists) {
  const Vec v = parse_rational_list("2,1/2,-1");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[1], Rational(1, 2));
  EXPECT_EQ(v[2], -1);
}

TEST(Rational, CombinatorialHelpers) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(binomial(-1, 3), -1);
}

TEST(Matrix, InverseAndDeterminant) {
  const Matrix m = Matrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(m.determinant(), 4);
  EXPECT_EQ(m * m.inverse(), Matrix::identity(3));
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_EQ(m.transpose(), m);
}

TEST(Matrix, SingularInverseThrows) {
  const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(m.determinant(), 0);
  EXPECT_EQ(m.rank(), 1u);
  EXPECT_THROW(m.inverse(), Error);
}

TEST(Matrix, SolveLinear) {
  const Matrix a = Matrix::from_rows({{1, 1}, {1, -1}, {2, 0}});
  Vec x;
  ASSERT_TRUE(solve_linear(a, {3, 1, 4}, x));
  EXPECT_EQ(x, (Vec{2, 1}));
  EXPECT_FALSE(solve_linear(a, {3, 1, 5}, x));
}

TEST(Matrix, ColumnsAndRows) {
  const Matrix m = Matrix::from_columns({{1, 2}, {3, 4}});
  EXPECT_EQ(m.row(0), (Vec{1, 3}));
  EXPECT_EQ(m.column(1), (Vec{3, 4}));
  EXPECT_EQ(m * Vec({1, 1}), (Vec{4, 6}));
}
