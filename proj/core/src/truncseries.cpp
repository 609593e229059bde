#include "rrloc/truncseries.hpp"

#include <algorithm>

#include "rrloc/error.hpp"

namespace rrloc {

TruncatedSeries::TruncatedSeries(std::size_t num_vars, unsigned trunc_degree) : poly_(num_vars), trunc_(trunc_degree) {}

TruncatedSeries::TruncatedSeries(const Polynomial& p, unsigned trunc_degree)
    : poly_(p.truncated(trunc_degree)), trunc_(trunc_degree) {}

TruncatedSeries TruncatedSeries::constant(std::size_t num_vars, const Rational& c, unsigned trunc_degree) {
  return TruncatedSeries(Polynomial::constant(num_vars, c), trunc_degree);
}

TruncatedSeries TruncatedSeries::truncated(unsigned degree) const {
  return TruncatedSeries(poly_, std::min(degree, trunc_));
}

TruncatedSeries TruncatedSeries::substitute_linear(const std::vector<LinearForm>& forms) const {
  return TruncatedSeries(poly_.substitute_linear(forms, static_cast<int>(trunc_)), trunc_);
}

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.num_vars() != b.num_vars()) fail(ErrorKind::Input, "series over different variable sets");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  unsigned n = std::min(trunc_, o.trunc_);
  return TruncatedSeries(poly_.truncated(n) + o.poly_.truncated(n), n);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  unsigned n = std::min(trunc_, o.trunc_);
  return TruncatedSeries(poly_.truncated(n) - o.poly_.truncated(n), n);
}

TruncatedSeries TruncatedSeries::operator-() const { return TruncatedSeries(-poly_, trunc_); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_compatible(*this, o);
  unsigned n = std::min(trunc_, o.trunc_);
  TruncatedSeries r(num_vars(), n);
  r.poly_ = Polynomial::multiply(poly_, o.poly_, static_cast<int>(n));
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const { return TruncatedSeries(poly_ * s, trunc_); }

TruncatedSeries parse_series(std::string_view text, std::size_t num_vars, unsigned trunc_degree) {
  Polynomial p = parse_polynomial(text, num_vars);
  if (p.degree() > static_cast<int>(trunc_degree)) fail(ErrorKind::Input, "series term above the truncation degree");
  return TruncatedSeries(p, trunc_degree);
}

TruncatedSeries ts_exp(const TruncatedSeries& s) {
  if (s.constant_term() != 0) fail(ErrorKind::Input, "ts_exp needs a series with zero constant term");
  TruncatedSeries sum = TruncatedSeries::constant(s.num_vars(), 1, s.trunc_degree());
  TruncatedSeries term = sum;
  for (unsigned k = 1; k <= s.trunc_degree(); ++k) {
    term = term * s * Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

TruncatedSeries ts_invert(const TruncatedSeries& s) {
  Rational c = s.constant_term();
  if (c == 0) fail(ErrorKind::Input, "ts_invert needs a nonzero constant term");
  const unsigned n = s.trunc_degree();
  TruncatedSeries one = TruncatedSeries::constant(s.num_vars(), 1, n);
  TruncatedSeries neg_t = one - s * (1 / c);
  TruncatedSeries sum = one;
  TruncatedSeries term = one;
  for (unsigned k = 1; k <= n; ++k) {
    term = term * neg_t;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * (1 / c);
}

TruncatedSeries ts_divide_exact(const TruncatedSeries& num, const Polynomial& den) {
  if (num.num_vars() != den.num_vars()) fail(ErrorKind::Input, "division over different variable sets");
  if (den.is_zero()) fail(ErrorKind::Input, "division by zero");
  const int d = den.min_degree();
  const int n = static_cast<int>(num.trunc_degree());
  if (d > n) fail(ErrorKind::Input, "divisor order exceeds the truncation degree");

  for (int j = 0; j < d; ++j)
    if (!num.polynomial().homogeneous_part(static_cast<unsigned>(j)).is_zero())
      fail(ErrorKind::ExactDivision, "numerator has terms below the divisor order");

  const Polynomial lowest = den.homogeneous_part(static_cast<unsigned>(d));
  std::vector<Polynomial> den_parts;
  for (int i = 0; i <= den.degree(); ++i) den_parts.push_back(den.homogeneous_part(static_cast<unsigned>(i)));

  std::vector<Polynomial> q;
  for (int k = 0; k <= n - d; ++k) {
    Polynomial r = num.polynomial().homogeneous_part(static_cast<unsigned>(k + d));
    for (int i = d + 1; i <= den.degree() && k + d - i >= 0; ++i)
      if (!den_parts[i].is_zero()) r -= den_parts[i] * q[static_cast<std::size_t>(k + d - i)];
    Polynomial qk;
    if (!divide_exact(r, lowest, qk)) fail(ErrorKind::ExactDivision, "nonzero remainder in exact series division");
    q.push_back(std::move(qk));
  }

  Polynomial out(num.num_vars());
  for (const auto& part : q) out += part;
  return TruncatedSeries(out, static_cast<unsigned>(n - d));
}

TruncatedSeries univariate_of_linear(const std::vector<Rational>& coeffs, const LinearForm& form, unsigned trunc_degree) {
  const Polynomial lin = Polynomial::linear(form);
  Polynomial sum(form.size());
  Polynomial power = Polynomial::constant(form.size(), 1);
  for (unsigned k = 0; k <= trunc_degree && k < coeffs.size(); ++k) {
    if (k > 0) power = power * lin;
    if (coeffs[k] != 0) sum += power * coeffs[k];
  }
  return TruncatedSeries(sum, trunc_degree);
}

std::vector<Rational> exp_coefficients(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = 1 / factorial(k);
  return c;
}

std::vector<Rational> sinh_ratio_coefficients(unsigned n) {
  // (e^{z/2}-e^{-z/2})/z = sum_j z^{2j} / (4^j (2j+1)!)
  std::vector<Rational> c(n + 1, Rational(0));
  Rational four_pow = 1;
  for (unsigned k = 0; k <= n; k += 2) {
    c[k] = 1 / (four_pow * factorial(k + 1));
    four_pow *= 4;
  }
  return c;
}

std::vector<Rational> todd_coefficients(unsigned n) {
  // Invert (1 - e^{-z})/z = sum_k (-1)^k z^k / (k+1)!.
  std::vector<Rational> a(n + 1);
  for (unsigned k = 0; k <= n; ++k) a[k] = (k % 2 ? -1 : 1) / factorial(k + 1);
  std::vector<Rational> b(n + 1, Rational(0));
  b[0] = 1 / a[0];
  for (unsigned k = 1; k <= n; ++k) {
    Rational s = 0;
    for (unsigned i = 1; i <= k; ++i) s += a[i] * b[k - i];
    b[k] = -s / a[0];
  }
  return b;
}

namespace {

// Visits every exponent vector of total degree <= max_degree in n variables.
template <typename Fn>
void for_each_exponent(std::size_t n, unsigned max_degree, Fn&& fn) {
  Exponents e;
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == n) {
      fn(e);
      return;
    }
    for (unsigned a = 0; a <= remaining; ++a) {
      e[var] = static_cast<std::uint16_t>(a);
      self(self, var + 1, remaining - a);
    }
    e[var] = 0;
  };
  rec(rec, 0, max_degree);
}

}  // namespace

TruncatedSeries exp_linear(const LinearForm& form, unsigned trunc_degree) {
  // Coefficient of x^a is prod_i form_i^{a_i} / a_i!.
  const std::size_t n = form.size();
  std::vector<std::vector<Rational>> table(n, std::vector<Rational>(trunc_degree + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (unsigned a = 0; a <= trunc_degree; ++a) {
      table[i][a] = p / factorial(a);
      p *= form[i];
    }
  }
  Polynomial poly(n);
  for_each_exponent(n, trunc_degree, [&](const Exponents& e) {
    Rational c = 1;
    for (std::size_t i = 0; i < n && c != 0; ++i) c *= table[i][e[i]];
    poly.add_term(e, c);
  });
  return TruncatedSeries(poly, trunc_degree);
}

TruncatedSeries sinh_ratio(const LinearForm& form, unsigned trunc_degree) {
  return univariate_of_linear(sinh_ratio_coefficients(trunc_degree), form, trunc_degree);
}

TruncatedSeries todd_linear(const LinearForm& form, unsigned trunc_degree) {
  return univariate_of_linear(todd_coefficients(trunc_degree), form, trunc_degree);
}

Polynomial positive_root_product(const RootSystem& rs) {
  Polynomial p = Polynomial::constant(rs.rank(), 1);
  for (const auto& f : rs.positive_root_forms()) p = p * Polynomial::linear(f);
  return p;
}

Rational gt_integrate(const RootSystem& rs, const Polynomial& p) {
  if (p.num_vars() != rs.rank()) fail(ErrorKind::Input, "gt_integrate: polynomial must be in rank-many variables");
  Polynomial alt(rs.rank());
  for (const auto& w : rs.weyl_group()) {
    std::vector<LinearForm> images;
    for (const auto& omega : rs.fundamental_weights()) images.push_back(rs.labels(w.matrix * omega));
    Polynomial term = p.substitute_linear(images);
    if (w.sign > 0)
      alt += term;
    else
      alt -= term;
  }
  Polynomial q;
  if (!divide_exact(alt, positive_root_product(rs), q))
    fail(ErrorKind::InternalInconsistency, "alternating sum is not divisible by the root product");
  return q.constant_term();
}

}  // namespace rrloc
