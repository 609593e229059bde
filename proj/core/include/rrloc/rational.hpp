#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rrloc {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// Comma separated list of rationals, e.g. "2,1" or "1/2,0".
Vec parse_rational_list(std::string_view text);

Rational dot(const Vec& u, const Vec& v);
Vec operator+(const Vec& u, const Vec& v);
Vec operator-(const Vec& u, const Vec& v);
Vec operator-(const Vec& u);
Vec operator*(const Rational& s, const Vec& v);
bool is_zero(const Vec& v);
bool is_integral(const Rational& q);
bool is_integral(const Vec& v);
Rational factorial(unsigned n);
Rational binomial(long n, unsigned k);

/// Dense row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& columns);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  Matrix transpose() const;

  Matrix operator*(const Matrix& other) const;
  Vec operator*(const Vec& v) const;
  bool operator==(const Matrix& other) const = default;

  Rational determinant() const;
  /// Throws Error(Input) if singular.
  Matrix inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Solves A x = b exactly. Returns false when the system is inconsistent;
/// free variables are set to zero.
bool solve_linear(const Matrix& a, const Vec& b, Vec& x);

}  // namespace rrloc
