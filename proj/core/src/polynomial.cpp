#include "rrloc/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rrloc/error.hpp"

namespace rrloc {

namespace {

void check_vars(std::size_t n) {
  if (n > kMaxVars) fail(ErrorKind::Input, "polynomials support at most " + std::to_string(kMaxVars) + " variables");
}

void same_vars(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars()) fail(ErrorKind::Input, "polynomials over different variable sets");
}

}  // namespace

Polynomial::Polynomial(std::size_t num_vars) : num_vars_(num_vars) { check_vars(num_vars); }

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) fail(ErrorKind::Input, "variable index out of range");
  Polynomial p(num_vars);
  Exponents e;
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(const LinearForm& form) {
  Polynomial p(form.size());
  for (std::size_t i = 0; i < form.size(); ++i) {
    Exponents e;
    e[i] = 1;
    p.add_term(e, form[i]);
  }
  return p;
}

void Polynomial::add_term(const Exponents& exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coeff(Exponents{}); }

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Polynomial Polynomial::truncated(unsigned max_degree) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e.degree() > max_degree) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned degree) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_)
    if (e.degree() == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  same_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const { return multiply(*this, o, -1); }

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial r = *this;
  r *= s;
  return r;
}

Polynomial Polynomial::multiply(const Polynomial& a, const Polynomial& b, int max_degree) {
  same_vars(a, b);
  Polynomial r(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    unsigned da = ea.degree();
    if (max_degree >= 0 && static_cast<int>(da) > max_degree) break;
    for (const auto& [eb, cb] : b.terms_) {
      if (max_degree >= 0 && static_cast<int>(da + eb.degree()) > max_degree) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k, int max_degree) const {
  Polynomial result = constant(num_vars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base, max_degree);
    k >>= 1U;
    if (k > 0) base = multiply(base, base, max_degree);
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] = static_cast<std::uint16_t>(d[var] - 1);
    r.add_term(d, c * static_cast<long>(e[var]));
  }
  return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, int max_degree) const {
  if (images.size() != num_vars_) fail(ErrorKind::Input, "compose: wrong number of images");
  std::size_t out_vars = images.empty() ? 0 : images.front().num_vars();
  for (const auto& im : images)
    if (im.num_vars() != out_vars) fail(ErrorKind::Input, "compose: images over different variable sets");

  std::vector<unsigned> max_exp(num_vars_, 0);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i) max_exp[i] = std::max<unsigned>(max_exp[i], e[i]);

  std::vector<std::vector<Polynomial>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) {
    powers[i].push_back(constant(out_vars, 1));
    for (unsigned k = 1; k <= max_exp[i]; ++k)
      powers[i].push_back(multiply(powers[i].back(), images[i], max_degree));
  }

  // Horner-style split on the leading variable: p = sum_a x_v^a p_a.
  using Group = std::vector<std::pair<Exponents, Rational>>;
  auto rec = [&](auto&& self, const Group& group, std::size_t var) -> Polynomial {
    if (var == num_vars_) {
      Polynomial c = constant(out_vars, 0);
      for (const auto& [e, q] : group) c.add_term(Exponents{}, q);
      return c;
    }
    std::map<unsigned, Group> split;
    for (const auto& [e, q] : group) split[e[var]].emplace_back(e, q);
    Polynomial r(out_vars);
    for (const auto& [a, sub] : split) {
      Polynomial inner = self(self, sub, var + 1);
      r += a == 0 ? inner : multiply(powers[var][a], inner, max_degree);
    }
    return r;
  };
  Group all(terms_.begin(), terms_.end());
  return rec(rec, all, 0);
}

Polynomial Polynomial::substitute_linear(const std::vector<LinearForm>& forms, int max_degree) const {
  std::vector<Polynomial> images;
  images.reserve(forms.size());
  for (const auto& f : forms) images.push_back(linear(f));
  return compose(images, max_degree);
}

Polynomial Polynomial::substitute_variable(std::size_t var, const LinearForm& form) const {
  if (form.size() != num_vars_) fail(ErrorKind::Input, "substitute_variable: form dimension mismatch");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < num_vars_; ++i) images.push_back(i == var ? linear(form) : variable(num_vars_, i));
  return compose(images);
}

Rational Polynomial::evaluate(const Vec& point) const {
  if (point.size() != num_vars_) fail(ErrorKind::Input, "evaluate: point dimension mismatch");
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rrloc::to_string(c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      os << " * x" << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

Polynomial parse_polynomial(std::string_view text, std::size_t num_vars) {
  Polynomial p(num_vars);
  std::string s(text);
  auto strip = [](std::string t) {
    t.erase(0, t.find_first_not_of(" \t\n"));
    t.erase(t.find_last_not_of(" \t\n") + 1);
    return t;
  };
  s = strip(s);
  if (s == "0") return p;

  std::vector<std::string> terms;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(" + ", pos);
    terms.push_back(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (next == std::string::npos) break;
    pos = next + 3;
  }

  for (const auto& raw : terms) {
    std::vector<std::string> factors;
    std::size_t fpos = 0;
    while (true) {
      auto star = raw.find('*', fpos);
      factors.push_back(strip(raw.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos)));
      if (star == std::string::npos) break;
      fpos = star + 1;
    }
    Rational c = 1;
    Exponents e;
    for (const auto& f : factors) {
      if (f.empty()) fail(ErrorKind::Input, "malformed polynomial term '" + raw + "'");
      if (f[0] == 'x') {
        auto caret = f.find('^');
        std::size_t var = std::stoul(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        if (var < 1 || var > num_vars) fail(ErrorKind::Input, "variable out of range in '" + raw + "'");
        unsigned exp = caret == std::string::npos ? 1 : static_cast<unsigned>(std::stoul(f.substr(caret + 1)));
        e[var - 1] = static_cast<std::uint16_t>(e[var - 1] + exp);
      } else {
        c *= parse_rational(f);
      }
    }
    p.add_term(e, c);
  }
  return p;
}

namespace {

// Lexicographic leading term (largest exponent array).
Polynomial::TermMap::const_iterator lex_leading(const Polynomial& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
    if (it->first.e > best->first.e) best = it;
  return best;
}

}  // namespace

bool divide_exact(const Polynomial& num, const Polynomial& den, Polynomial& quotient) {
  same_vars(num, den);
  if (den.is_zero()) fail(ErrorKind::Input, "division by the zero polynomial");
  quotient = Polynomial(num.num_vars());
  Polynomial rem = num;
  auto lead_den = lex_leading(den);
  const Exponents dexp = lead_den->first;
  const Rational dcoef = lead_den->second;
  while (!rem.is_zero()) {
    auto lead = lex_leading(rem);
    if (!dexp.divides(lead->first)) return false;
    Exponents qexp;
    for (std::size_t i = 0; i < kMaxVars; ++i) qexp[i] = static_cast<std::uint16_t>(lead->first[i] - dexp[i]);
    Rational qc = lead->second / dcoef;
    quotient.add_term(qexp, qc);
    Polynomial step(num.num_vars());
    for (const auto& [e, c] : den.terms()) step.add_term(e + qexp, c * qc);
    rem -= step;
  }
  return true;
}

Rational normalize_form(LinearForm& form) {
  auto first = std::find_if(form.begin(), form.end(), [](const Rational& q) { return q != 0; });
  if (first == form.end()) fail(ErrorKind::Input, "zero linear form");
  Integer den_lcm = 1;
  for (const auto& q : form) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Integer content = 0;
  for (const auto& q : form) {
    Integer n = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  Rational factor(content, den_lcm);
  factor.canonicalize();
  if (*first < 0) factor = -factor;
  for (auto& q : form) q /= factor;
  return factor;
}

}  // namespace rrloc
