#include "rrloc/invariants.hpp"

#include "rrloc/error.hpp"

namespace rrloc {

Polynomial reynolds(const RootSystem& rs, const Polynomial& p) {
  Polynomial sum(p.num_vars());
  for (const auto& w : rs.weyl_group()) sum += p.substitute_linear(rs.substitution(w));
  return sum * Rational(1, static_cast<long>(rs.weyl_group().size()));
}

std::vector<Exponents> weighted_monomials(const std::vector<unsigned>& weights, unsigned degree) {
  std::vector<Exponents> out;
  Exponents e;
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var == weights.size()) {
      if (remaining == 0) out.push_back(e);
      return;
    }
    for (unsigned a = 0; a * weights[var] <= remaining; ++a) {
      e[var] = static_cast<std::uint16_t>(a);
      self(self, var + 1, remaining - a * weights[var]);
    }
    e[var] = 0;
  };
  if (weights.size() > kMaxVars) fail(ErrorKind::Input, "too many generators");
  rec(rec, 0, degree);
  return out;
}

namespace {

std::vector<Exponents> homogeneous_monomials(std::size_t n, unsigned degree) {
  return weighted_monomials(std::vector<unsigned>(n, 1), degree);
}

// Coefficient vectors of polynomials on a fixed monomial list.
Matrix coefficient_columns(const std::vector<Polynomial>& polys, const std::vector<Exponents>& monos) {
  Matrix m(monos.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (std::size_t r = 0; r < monos.size(); ++r) m(r, c) = polys[c].coeff(monos[r]);
  return m;
}

Polynomial generator_monomial(const BasicInvariants& basis, const Exponents& b, std::size_t num_vars) {
  Polynomial p = Polynomial::constant(num_vars, 1);
  for (std::size_t r = 0; r < basis.generators.size(); ++r)
    if (b[r] > 0) p = p * basis.generators[r].pow(b[r]);
  return p;
}

}  // namespace

BasicInvariants basic_invariants(const RootSystem& rs, unsigned max_degree) {
  const std::size_t n = rs.rank();
  BasicInvariants basis;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const auto monos = homogeneous_monomials(n, d);
    std::vector<Polynomial> span;
    for (const auto& b : weighted_monomials(basis.degrees, d)) span.push_back(generator_monomial(basis, b, n));
    std::size_t rank = span.empty() ? 0 : coefficient_columns(span, monos).rank();
    for (const auto& e : monos) {
      Polynomial x(n);
      x.add_term(e, 1);
      Polynomial inv = reynolds(rs, x);
      if (inv.is_zero()) continue;
      span.push_back(inv);
      std::size_t r = coefficient_columns(span, monos).rank();
      if (r > rank) {
        rank = r;
        basis.generators.push_back(inv);
        basis.degrees.push_back(d);
      } else {
        span.pop_back();
      }
    }
  }
  return basis;
}

Polynomial express_in_invariants(const BasicInvariants& basis, const Polynomial& p, unsigned max_degree) {
  const std::size_t n = p.num_vars();
  Polynomial out(basis.generators.size());
  if (p.degree() > static_cast<int>(max_degree))
    fail(ErrorKind::Input, "polynomial exceeds the requested degree");
  for (unsigned d = 0; d <= max_degree; ++d) {
    Polynomial part = p.homogeneous_part(d);
    if (part.is_zero()) continue;
    if (d == 0) {
      out.add_term(Exponents{}, part.constant_term());
      continue;
    }
    const auto gens = weighted_monomials(basis.degrees, d);
    if (gens.empty()) fail(ErrorKind::GeneratorDeficiency, "no generator monomials in degree " + std::to_string(d));
    std::vector<Polynomial> cols;
    for (const auto& b : gens) cols.push_back(generator_monomial(basis, b, n));
    const auto monos = homogeneous_monomials(n, d);
    Vec rhs(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) rhs[r] = part.coeff(monos[r]);
    Vec x;
    if (!solve_linear(coefficient_columns(cols, monos), rhs, x))
      fail(ErrorKind::GeneratorDeficiency, "invariant is not expressible in the generators in degree " + std::to_string(d));
    for (std::size_t i = 0; i < gens.size(); ++i) out.add_term(gens[i], x[i]);
  }
  return out;
}

}  // namespace rrloc
