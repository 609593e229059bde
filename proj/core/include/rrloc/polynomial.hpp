#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rrloc/rational.hpp"

namespace rrloc {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent multi-index. Unused trailing slots stay zero.
struct Exponents {
  std::array<std::uint16_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  std::uint16_t& operator[](std::size_t i) { return e[i]; }
  std::uint16_t operator[](std::size_t i) const { return e[i]; }
  bool operator==(const Exponents&) const = default;
  Exponents operator+(const Exponents& o) const {
    Exponents r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
  }
  bool divides(const Exponents& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
};

/// Graded order: total degree ascending, then x1-heavy monomials first.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
  }
};

using LinearForm = Vec;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  explicit Polynomial(std::size_t num_vars = 0);

  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial linear(const LinearForm& form);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& exps, const Rational& coeff);
  Rational coeff(const Exponents& exps) const;
  Rational constant_term() const;

  /// Largest total degree, or -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  int degree_in(std::size_t var) const;

  Polynomial truncated(unsigned max_degree) const;
  Polynomial homogeneous_part(unsigned degree) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  bool operator==(const Polynomial& o) const = default;

  /// Product with every term of total degree above max_degree dropped.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_degree);
  Polynomial pow(unsigned k, int max_degree = -1) const;

  Polynomial derivative(std::size_t var) const;

  /// Returns p(images[0], ..., images[n-1]); the images share a variable set
  /// of their own. Terms above max_degree are dropped when max_degree >= 0.
  Polynomial compose(const std::vector<Polynomial>& images, int max_degree = -1) const;
  /// Substitutes x_i -> forms[i](y).
  Polynomial substitute_linear(const std::vector<LinearForm>& forms, int max_degree = -1) const;
  /// Replaces one variable by a linear form in the full variable set.
  Polynomial substitute_variable(std::size_t var, const LinearForm& form) const;

  Rational evaluate(const Vec& point) const;

  /// Canonical text "c * x1^a1 * x2^a2 + ..." in graded order.
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars);

/// Exact division by a single divisor. Returns false when a remainder is left;
/// `quotient` is then unspecified.
bool divide_exact(const Polynomial& num, const Polynomial& den, Polynomial& quotient);

/// Scales a nonzero form to a primitive integer vector whose first nonzero
/// entry is positive. Returns the factor f with form = f * normalized.
Rational normalize_form(LinearForm& form);

}  // namespace rrloc
