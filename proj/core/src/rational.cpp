#include "rrloc/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "rrloc/error.hpp"

namespace rrloc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return "config";
    case ErrorKind::Input: return "input";
    case ErrorKind::DegenerateOrbit: return "degenerate-orbit";
    case ErrorKind::SingularValue: return "singular-value";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::GeneratorDeficiency: return "generator-deficiency";
    case ErrorKind::NonGeneric: return "non-generic";
    case ErrorKind::Convergence: return "convergence";
    case ErrorKind::ExactDivision: return "exact-division";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    case ErrorKind::CalibrationDrift: return "calibration-drift";
  }
  return "unknown";
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den)) fail(ErrorKind::Input, "not a rational number: '" + std::string(text) + "'");
  std::string n(num), d(den);
  if (n[0] == '+') n.erase(0, 1);
  if (d[0] == '+') d.erase(0, 1);
  Integer zn(n), zd(d);
  if (zd == 0) fail(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

Vec parse_rational_list(std::string_view text) {
  Vec out;
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::Input, "empty list");
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_rational(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

Rational dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(ErrorKind::Input, "dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Vec operator+(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(ErrorKind::Input, "dimension mismatch in vector sum");
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vec operator-(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(ErrorKind::Input, "dimension mismatch in vector difference");
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vec operator-(const Vec& u) {
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = -u[i];
  return r;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_integral(q); });
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, unsigned k) {
  // Generalized binomial coefficient, valid for negative n.
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= Rational(n - static_cast<long>(i));
    r /= Rational(static_cast<long>(i) + 1);
  }
  return r;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows_) fail(ErrorKind::Input, "ragged column list");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(ErrorKind::Input, "ragged row list");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::Input, "dimension mismatch in matrix product");
  Matrix m(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) m(r, c) += a * other(k, c);
    }
  return m;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) fail(ErrorKind::Input, "dimension mismatch in matrix-vector product");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

namespace {

// Gaussian elimination to row echelon form; returns the pivot columns and
// the sign/product bookkeeping needed for the determinant.
struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivots;
  int swaps = 0;
};

Echelon echelon(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      ++e.swaps;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace

Rational Matrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::Input, "determinant of a non-square matrix");
  Echelon e = echelon(*this);
  if (e.pivots.size() < rows_) return 0;
  Rational d = (e.swaps % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i < rows_; ++i) d *= e.m(i, i);
  return d;
}

std::size_t Matrix::rank() const { return echelon(*this).pivots.size(); }

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::Input, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  Matrix a(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = (*this)(r, c);
    a(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) fail(ErrorKind::Input, "matrix is singular");
    if (p != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a(p, c), a(col, c));
    Rational inv = 1 / a(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) a(col, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a(r, n + c);
  return out;
}

bool solve_linear(const Matrix& a, const Vec& b, Vec& x) {
  if (a.rows() != b.size()) fail(ErrorKind::Input, "dimension mismatch in linear solve");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e = echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return false;
  x.assign(a.cols(), Rational(0));
  for (std::size_t i = e.pivots.size(); i-- > 0;) {
    std::size_t col = e.pivots[i];
    Rational s = e.m(i, a.cols());
    for (std::size_t c = col + 1; c < a.cols(); ++c) s -= e.m(i, c) * x[c];
    x[col] = s / e.m(i, col);
  }
  return true;
}

}  // namespace rrloc
