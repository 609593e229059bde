#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrloc/polynomial.hpp"
#include "rrloc/rootsys.hpp"

namespace rrloc {

/// Multivariate power series known up to (and including) total degree N.
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t num_vars, unsigned trunc_degree);
  TruncatedSeries(const Polynomial& p, unsigned trunc_degree);

  static TruncatedSeries constant(std::size_t num_vars, const Rational& c, unsigned trunc_degree);

  std::size_t num_vars() const { return poly_.num_vars(); }
  unsigned trunc_degree() const { return trunc_; }
  const Polynomial& polynomial() const { return poly_; }
  Rational coeff(const Exponents& e) const { return poly_.coeff(e); }
  Rational constant_term() const { return poly_.constant_term(); }
  bool is_zero() const { return poly_.is_zero(); }

  /// Same series known to a lower degree.
  TruncatedSeries truncated(unsigned degree) const;
  /// Substitutes x_i -> forms[i]; the forms are over a new variable set.
  TruncatedSeries substitute_linear(const std::vector<LinearForm>& forms) const;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator-() const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  bool operator==(const TruncatedSeries& o) const = default;

  /// Canonical polynomial text; the truncation degree is carried separately.
  std::string to_string() const { return poly_.to_string(); }

 private:
  Polynomial poly_;
  unsigned trunc_;
};

TruncatedSeries parse_series(std::string_view text, std::size_t num_vars, unsigned trunc_degree);

TruncatedSeries ts_exp(const TruncatedSeries& s);
TruncatedSeries ts_invert(const TruncatedSeries& s);
/// Quotient q with q * den = num; q is known to degree N - (lowest degree of den).
TruncatedSeries ts_divide_exact(const TruncatedSeries& num, const Polynomial& den);

/// Sum_k coeffs[k] * form^k, truncated at degree N.
TruncatedSeries univariate_of_linear(const std::vector<Rational>& coeffs, const LinearForm& form, unsigned trunc_degree);

/// Univariate coefficient lists up to z^n.
std::vector<Rational> exp_coefficients(unsigned n);
/// (e^{z/2} - e^{-z/2}) / z
std::vector<Rational> sinh_ratio_coefficients(unsigned n);
/// z / (1 - e^{-z})
std::vector<Rational> todd_coefficients(unsigned n);

TruncatedSeries exp_linear(const LinearForm& form, unsigned trunc_degree);
TruncatedSeries sinh_ratio(const LinearForm& form, unsigned trunc_degree);
TruncatedSeries todd_linear(const LinearForm& form, unsigned trunc_degree);

/// Product of the positive-root forms as a polynomial in x_1..x_l.
Polynomial positive_root_product(const RootSystem& rs);

/// Integral over the flag manifold G/T of a polynomial in the classes e_1..e_l,
/// by Weyl antisymmetrization and exact division by the root product.
Rational gt_integrate(const RootSystem& rs, const Polynomial& p);

}  // namespace rrloc
