#include "rrloc/jkresidue.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "rrloc/error.hpp"

namespace rrloc {

namespace {

Rational power(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

int sign_of(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

RatExpTerm::RatExpTerm(Polynomial numerator, Vec phase, std::vector<DenominatorFactor> dens,
                       std::vector<Vec> sign_covectors)
    : numerator_(std::move(numerator)), phase_(std::move(phase)), sign_covectors_(std::move(sign_covectors)) {
  const std::size_t n = phase_.size();
  if (numerator_.num_vars() != n) fail(ErrorKind::Input, "numerator and phase have different dimensions");
  for (const auto& c : sign_covectors_)
    if (c.size() != n) fail(ErrorKind::Input, "sign covector has the wrong dimension");

  std::map<Vec, unsigned> merged;
  for (auto& d : dens) {
    if (d.form.size() != n) fail(ErrorKind::Input, "denominator form has the wrong dimension");
    if (d.multiplicity == 0) continue;
    if (rrloc::is_zero(d.form)) fail(ErrorKind::Input, "zero denominator form");
    Rational f = normalize_form(d.form);
    numerator_ *= 1 / power(f, d.multiplicity);
    merged[d.form] += d.multiplicity;
  }
  for (auto& [form, mult] : merged) dens_.push_back({form, mult});
}

RatExpTerm RatExpTerm::change_coordinates(const Matrix& coords) const {
  if (coords.rows() != num_vars() || coords.cols() != num_vars())
    fail(ErrorKind::Input, "coordinate matrix has the wrong shape");
  std::vector<LinearForm> rows;
  for (std::size_t i = 0; i < coords.rows(); ++i) rows.push_back(coords.row(i));
  const Matrix t = coords.transpose();
  std::vector<DenominatorFactor> dens;
  for (const auto& d : dens_) dens.push_back({t * d.form, d.multiplicity});
  std::vector<Vec> signs;
  for (const auto& c : sign_covectors_) signs.push_back(t * c);
  return RatExpTerm(numerator_.substitute_linear(rows), t * phase_, std::move(dens), std::move(signs));
}

RatExpTerm RatExpTerm::scaled(const Rational& s) const {
  RatExpTerm r = *this;
  r.numerator_ *= s;
  return r;
}

std::vector<RatExpTerm> merge_terms(std::vector<RatExpTerm> terms) {
  std::vector<RatExpTerm> out;
  for (auto& t : terms) {
    auto it = std::find_if(out.begin(), out.end(), [&](const RatExpTerm& o) { return o.same_shape(t); });
    if (it == out.end())
      out.push_back(std::move(t));
    else
      it->numerator_ += t.numerator_;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const RatExpTerm& t) { return t.numerator().is_zero(); }),
            out.end());
  return out;
}

Cone build_cone(const std::vector<LinearForm>& weights, const Vec& xi) {
  Cone c;
  c.xi = xi;
  for (const auto& w : weights) {
    Rational v = dot(w, xi);
    if (v == 0) fail(ErrorKind::NonGeneric, "weight vanishes on xi");
    c.flips.push_back(v > 0 ? 1 : -1);
    c.weights.push_back(v > 0 ? w : -w);
  }
  return c;
}

namespace {

// Moves a linear form to the pole z = pole (pole has zero entry at var).
Vec restrict_form(const Vec& form, std::size_t var, const Vec& pole) {
  Vec out = form;
  Rational c = out[var];
  out[var] = 0;
  if (c != 0)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * pole[i];
  return out;
}

std::vector<RatExpTerm> residues_of_term(const RatExpTerm& t, std::size_t var) {
  const auto& dens = t.denominators();
  std::vector<std::size_t> poles;
  unsigned den_degree = 0;
  for (std::size_t j = 0; j < dens.size(); ++j)
    if (dens[j].form[var] != 0) {
      poles.push_back(j);
      den_degree += dens[j].multiplicity;
    }

  int direction = 0;
  if (t.sign_covectors().empty()) {
    direction = sign_of(t.phase()[var]);
  } else {
    for (const auto& c : t.sign_covectors())
      if ((direction = sign_of(c[var])) != 0) break;
  }
  if (direction < 0) return {};
  if (direction == 0) {
    if (t.numerator().degree_in(var) + 2 <= static_cast<int>(den_degree)) return {};
    fail(ErrorKind::Convergence, "zero-phase term without enough decay");
  }

  // Pole locations z = b_j(rest), rational-affine in the other variables.
  std::vector<Vec> locations;
  for (std::size_t j : poles) {
    const Vec& f = dens[j].form;
    Vec b(f.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != var) b[i] = -f[i] / f[var];
    for (const auto& other : locations)
      if (other == b) fail(ErrorKind::NonGeneric, "coinciding pole locations");
    locations.push_back(b);
  }

  std::vector<RatExpTerm> out;
  for (std::size_t p = 0; p < poles.size(); ++p) {
    const std::size_t j = poles[p];
    const Vec& pole = locations[p];
    const unsigned m = dens[j].multiplicity;
    const Rational lead = dens[j].form[var];

    // Expansion of d^{m-1}/dz^{m-1} of q e^{phase} / prod_{k != j}, keyed by
    // multiplicities of the remaining factors.
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < dens.size(); ++k)
      if (k != j) others.push_back(k);
    std::map<std::vector<unsigned>, Polynomial> parts;
    {
      std::vector<unsigned> mults;
      for (std::size_t k : others) mults.push_back(dens[k].multiplicity);
      parts.emplace(mults, t.numerator());
    }
    for (unsigned step = 0; step + 1 < m; ++step) {
      std::map<std::vector<unsigned>, Polynomial> next;
      auto add = [&](const std::vector<unsigned>& key, const Polynomial& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = next.try_emplace(key, q);
        if (!inserted) it->second += q;
      };
      for (const auto& [mults, q] : parts) {
        add(mults, q.derivative(var) + q * t.phase()[var]);
        for (std::size_t i = 0; i < others.size(); ++i) {
          const Rational c = dens[others[i]].form[var];
          if (c == 0) continue;
          std::vector<unsigned> bumped = mults;
          bumped[i] += 1;
          add(bumped, q * (-Rational(mults[i]) * c));
        }
      }
      parts = std::move(next);
    }

    const Rational scale = 1 / (factorial(m - 1) * power(lead, m));
    Vec phase = restrict_form(t.phase(), var, pole);
    std::vector<Vec> signs;
    for (const auto& c : t.sign_covectors()) signs.push_back(restrict_form(c, var, pole));
    for (const auto& [mults, q] : parts) {
      std::vector<DenominatorFactor> new_dens;
      for (std::size_t i = 0; i < others.size(); ++i) {
        Vec f = restrict_form(dens[others[i]].form, var, pole);
        if (rrloc::is_zero(f)) fail(ErrorKind::NonGeneric, "denominator vanishes identically at a pole");
        new_dens.push_back({std::move(f), mults[i]});
      }
      out.emplace_back(q.substitute_variable(var, pole) * scale, phase, std::move(new_dens), signs);
    }
  }
  return out;
}

}  // namespace

std::vector<RatExpTerm> res_plus_1d(const std::vector<RatExpTerm>& terms, std::size_t var) {
  std::vector<RatExpTerm> out;
  for (const auto& t : terms) {
    if (var >= t.num_vars()) fail(ErrorKind::Input, "residue variable out of range");
    auto r = residues_of_term(t, var);
    std::move(r.begin(), r.end(), std::back_inserter(out));
  }
  return merge_terms(std::move(out));
}

Rational res_in_coordinates(const std::vector<RatExpTerm>& terms, const Matrix& coords) {
  const Rational det = coords.determinant();
  if (det == 0) fail(ErrorKind::Input, "coordinate vectors are linearly dependent");
  std::vector<RatExpTerm> current;
  for (const auto& t : terms) current.push_back(t.change_coordinates(coords));
  current = merge_terms(std::move(current));
  for (std::size_t v = coords.cols(); v-- > 0;) current = res_plus_1d(current, v);
  Rational sum = 0;
  for (const auto& t : current) sum += t.numerator().constant_term();
  return sum * abs(det);
}

bool coordinates_admissible(const Cone& cone, const Matrix& coords) {
  for (const auto& w : cone.weights) {
    Vec in_y = coords.transpose() * w;
    auto last = std::find_if(in_y.rbegin(), in_y.rend(), [](const Rational& q) { return q != 0; });
    if (last == in_y.rend() || *last < 0) return false;
  }
  return true;
}

namespace {

Matrix default_coordinates(const Vec& xi) {
  const std::size_t n = xi.size();
  std::size_t skip = n - 1;
  while (xi[skip] == 0) --skip;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) {
      Vec e(n, Rational(0));
      e[i] = 1;
      cols.push_back(e);
    }
  cols.push_back(xi);
  return Matrix::from_columns(cols);
}

// Portable draw in [-3, 3] from the raw engine output.
Matrix random_coordinates(const Vec& xi, std::mt19937_64& rng) {
  const std::size_t n = xi.size();
  while (true) {
    std::vector<Vec> cols;
    for (std::size_t c = 0; c + 1 < n; ++c) {
      Vec v(n);
      for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
      cols.push_back(v);
    }
    cols.push_back(xi);
    Matrix m = Matrix::from_columns(cols);
    if (m.determinant() != 0) return m;
  }
}

}  // namespace

ResidueResult res_cone(const std::vector<RatExpTerm>& terms, const Cone& cone, const ResidueOptions& options) {
  if (options.max_retries < 1) fail(ErrorKind::Config, "retry limit must be at least 1");
  if (cone.xi.empty() || rrloc::is_zero(cone.xi)) fail(ErrorKind::Input, "cone direction must be nonzero");
  for (const auto& t : terms)
    if (t.num_vars() != cone.xi.size()) fail(ErrorKind::Input, "term dimension does not match the cone");

  ResidueResult result;
  result.seed = options.seed;
  Matrix coords = options.coords ? *options.coords : default_coordinates(cone.xi);
  if (!coordinates_admissible(cone, coords)) fail(ErrorKind::Input, "coordinate system is not adapted to the cone");

  std::mt19937_64 rng(options.seed);
  std::string last_error;
  for (unsigned attempt = 0; attempt <= options.max_retries; ++attempt) {
    if (attempt > 0) coords = random_coordinates(cone.xi, rng);
    try {
      result.value = res_in_coordinates(terms, coords);
      result.retries = attempt;
      result.coords = coords;
      return result;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGeneric && e.kind() != ErrorKind::Convergence) throw;
      last_error = e.what();
    }
  }
  fail(ErrorKind::NonGeneric, "no generic coordinate system after " + std::to_string(options.max_retries) +
                                  " retries (" + last_error + ")");
}

}  // namespace rrloc
