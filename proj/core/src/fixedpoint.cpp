#include "rrloc/fixedpoint.hpp"

#include <algorithm>
#include <random>

#include "rrloc/charformula.hpp"
#include "rrloc/error.hpp"
#include "rrloc/invariants.hpp"
#include "rrloc/truncseries.hpp"

namespace rrloc {

namespace {

void check_regular(const RootSystem& rs, const Weight& lam) {
  const Vec v = rs.ambient(lam);
  for (const auto& g : rs.positive_roots())
    if (rs.pairing(v, g) == 0) fail(ErrorKind::DegenerateOrbit, "weight (" + lam.to_string() + ") lies on a Weyl wall");
}

Integer lcm_of_denominators(const Vec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace

std::vector<FixedPointDatum> orbit_fixed_data(const RootSystem& rs, const Weight& lam) {
  check_regular(rs, lam);
  const Vec v = rs.ambient(lam);
  std::vector<FixedPointDatum> out;
  std::size_t index = 0;
  for (const auto& w : rs.weyl_group()) {
    FixedPointDatum d;
    d.label = "w" + std::to_string(index++);
    d.moment = rs.labels(w.matrix * v);
    for (const auto& g : rs.positive_roots()) d.tangent_weights.push_back(rs.labels(w.matrix * g));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<FixedPointDatum> product_fixed_data(const RootSystem& rs, const std::vector<Weight>& factors) {
  std::vector<FixedPointDatum> out{FixedPointDatum{"", Vec(rs.rank(), Rational(0)), {}, 0}};
  for (const auto& f : factors) {
    const auto points = orbit_fixed_data(rs, f);
    std::vector<FixedPointDatum> next;
    for (const auto& base : out)
      for (const auto& p : points) {
        FixedPointDatum d;
        d.label = base.label.empty() ? p.label : base.label + "." + p.label;
        d.moment = base.moment + p.moment;
        d.tangent_weights = base.tangent_weights;
        d.tangent_weights.insert(d.tangent_weights.end(), p.tangent_weights.begin(), p.tangent_weights.end());
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

using Laurent = std::map<long, Integer>;

// Exact value at u = 1 of num(u) / prod (u^{c} - 1).
Integer laurent_ratio_at_one(const Laurent& num, const std::vector<long>& den_exponents) {
  if (num.empty()) return 0;
  const long shift = num.begin()->first;
  std::vector<Integer> n(static_cast<std::size_t>(num.rbegin()->first - shift + 1));
  for (const auto& [e, c] : num) n[static_cast<std::size_t>(e - shift)] = c;

  std::vector<Integer> d{1};
  for (long c : den_exponents) {
    std::vector<Integer> next(d.size() + static_cast<std::size_t>(c));
    for (std::size_t i = 0; i < d.size(); ++i) {
      next[i + static_cast<std::size_t>(c)] += d[i];
      next[i] -= d[i];
    }
    d = std::move(next);
  }

  // d is monic; long division from the top.
  if (n.size() < d.size()) {
    bool zero = std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; });
    if (zero) return 0;
    fail(ErrorKind::InternalInconsistency, "fixed-point sum is not a Laurent polynomial");
  }
  std::vector<Integer> q(n.size() - d.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer c = n[i + d.size() - 1];
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= c * d[j];
  }
  if (!std::all_of(n.begin(), n.end(), [](const Integer& x) { return x == 0; }))
    fail(ErrorKind::InternalInconsistency, "fixed-point sum is not a Laurent polynomial");
  Integer sum = 0;
  for (const auto& c : q) sum += c;
  return sum;
}

std::vector<long> default_direction(const RootSystem& rs) {
  // Pairs to 1 with every simple root, so no root vanishes on it.
  Vec ones(rs.rank(), Rational(1));
  Vec xi = rs.cartan_matrix().inverse() * ones;
  Integer l = lcm_of_denominators(xi);
  std::vector<long> out;
  for (const auto& q : xi) out.push_back(Rational(q * l).get_num().get_si());
  return out;
}

long pair_long(const Vec& form, const std::vector<long>& xi) {
  Rational s = 0;
  for (std::size_t i = 0; i < form.size(); ++i) s += form[i] * xi[i];
  if (!is_integral(s)) fail(ErrorKind::InternalInconsistency, "non-integral pairing with an integral direction");
  return s.get_num().get_si();
}

}  // namespace

Integer rr_orbit_fixedpoint(const RootSystem& rs, const DominantWeight& lam, unsigned k,
                            const GenericityOptions& options) {
  if (lam.labels().size() != rs.rank()) fail(ErrorKind::Input, "weight does not match the rank of " + rs.label());
  const Vec lam_amb = rs.ambient(lam);
  const auto roots = rs.positive_root_forms();

  std::mt19937_64 rng(options.seed);
  std::vector<long> xi = default_direction(rs);
  for (unsigned attempt = 0;; ++attempt) {
    bool generic = std::all_of(roots.begin(), roots.end(), [&](const Vec& g) { return pair_long(g, xi) != 0; });
    if (generic) break;
    if (attempt >= options.max_retries) fail(ErrorKind::NonGeneric, "no generic direction found");
    for (auto& x : xi) x = static_cast<long>(rng() % 19) - 9;
  }

  std::vector<long> den;
  for (const auto& g : roots) den.push_back(std::abs(pair_long(g, xi)));

  // e^{k<w lam,X>} prod 1/(1 - e^{-<w gamma,X>}) at X = t xi, u = e^t:
  // a > 0 gives u^a/(u^a - 1), a < 0 gives -1/(u^{|a|} - 1).
  Laurent num;
  for (const auto& w : rs.weyl_group()) {
    long exponent = static_cast<long>(k) * pair_long(rs.labels(w.matrix * lam_amb), xi);
    int sign = 1;
    for (const auto& g : rs.positive_roots()) {
      long a = pair_long(rs.labels(w.matrix * g), xi);
      if (a > 0)
        exponent += a;
      else
        sign = -sign;
    }
    num[exponent] += sign;
  }
  for (auto it = num.begin(); it != num.end();) it = it->second == 0 ? num.erase(it) : std::next(it);
  return laurent_ratio_at_one(num, den);
}

Rational rr_leading_coefficient(const RootSystem& rs, const DominantWeight& lam) {
  orbit_volume(rs, lam.weight());
  const unsigned n = static_cast<unsigned>(rs.num_positive_roots());
  Rational diff = 0;
  for (unsigned j = 0; j <= n; ++j) {
    Rational term = binomial(n, j) * Rational(rr_orbit_fixedpoint(rs, lam, j));
    diff += ((n - j) % 2 == 0) ? term : Rational(-term);
  }
  return diff / factorial(n);
}

bool s4_identity_check(const RootSystem& rs, const WeylElement& w, unsigned trunc_degree) {
  const unsigned m = static_cast<unsigned>(rs.num_positive_roots());
  const unsigned top = trunc_degree + m;
  const std::size_t l = rs.rank();
  try {
    TruncatedSeries one_minus = TruncatedSeries::constant(l, 1, top);
    TruncatedSeries sinh_prod = TruncatedSeries::constant(l, 1, top);
    Polynomial moved(l);
    moved = Polynomial::constant(l, 1);
    for (const auto& g : rs.positive_roots()) {
      const Vec wg = rs.labels(w.matrix * g);
      one_minus *= TruncatedSeries::constant(l, 1, top) - exp_linear(-wg, top);
      moved = moved * Polynomial::linear(wg);
      const Vec half = Rational(1, 2) * rs.labels(g);
      sinh_prod *= exp_linear(half, top) - exp_linear(-half, top);
    }
    const Polynomial roots = positive_root_product(rs);

    Polynomial ratio;
    if (!divide_exact(roots, moved, ratio)) fail(ErrorKind::ExactDivision, "root products are not proportional");
    TruncatedSeries lhs = ts_invert(ts_divide_exact(one_minus, moved)) *
                          TruncatedSeries(ratio * Rational(w.sign), trunc_degree);

    TruncatedSeries rhs = exp_linear(rs.labels(w.matrix * rs.rho()), trunc_degree) *
                          ts_invert(ts_divide_exact(sinh_prod, roots));
    return lhs == rhs;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ExactDivision) fail(ErrorKind::InternalInconsistency, e.what());
    throw;
  }
}

std::optional<Rational> CalibrationRegistry::constant(const std::string& signature) const {
  auto it = constants_.find(signature);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

void CalibrationRegistry::freeze(const std::string& signature, const Rational& c) {
  auto [it, inserted] = constants_.emplace(signature, c);
  if (!inserted && it->second != c)
    fail(ErrorKind::CalibrationDrift, "residue constant for " + signature + " drifted from " + to_string(it->second) +
                                          " to " + to_string(c));
}

std::optional<CalibrationCase> builtin_calibration_case(const RootSystem& rs) {
  if (rs.label() != "A1") return std::nullopt;
  // Three copies of the minimal orbit reduced at rho: the base is a point and
  // the reduced space is the orbit of rho itself.
  const Weight omega(Vec{1});
  CalibrationCase cc;
  cc.problem.fixed_points = product_fixed_data(rs, {omega, omega, omega});
  cc.problem.level = omega;
  cc.problem.k = 1;
  cc.expected = rr_orbit_fixedpoint(rs, DominantWeight(omega), 1);
  return cc;
}

namespace {

void check_problem(const FibrationProblem& p, const RootSystem& rs) {
  const std::size_t l = rs.rank();
  if (p.k <= 0) fail(ErrorKind::Input, "k must be positive");
  if (p.level.size() != l) fail(ErrorKind::Input, "level does not match the rank of " + rs.label());
  if (p.fixed_points.empty()) fail(ErrorKind::Input, "no fixed points given");
  const std::size_t n = p.fixed_points.front().tangent_weights.size();
  for (const auto& f : p.fixed_points) {
    if (f.moment.size() != l) fail(ErrorKind::Input, "moment of " + f.label + " has the wrong dimension");
    if (f.tangent_weights.size() != n) fail(ErrorKind::Input, "fixed points have different tangent dimensions");
    if (f.symplectic_exponent != 0) fail(ErrorKind::Input, "isolated fixed points need a zero symplectic exponent");
    for (const auto& w : f.tangent_weights)
      if (w.size() != l || is_zero(w)) fail(ErrorKind::Input, "bad tangent weight at " + f.label);
  }

  const Weight lam = Rational(p.k) * p.level;
  if (!lam.is_integral() || !lam.is_dominant())
    fail(ErrorKind::Inadmissible, "k*level (" + lam.to_string() + ") is not dominant integral");
  const Matrix to_roots = rs.cartan_matrix().transpose().inverse();
  for (const auto& f : p.fixed_points) {
    const Vec km = Rational(p.k) * f.moment;
    if (!is_integral(km)) fail(ErrorKind::Inadmissible, "k*moment at " + f.label + " is not integral");
    if (!is_integral(to_roots * (km - lam.labels())))
      fail(ErrorKind::Inadmissible, "k*(moment - level) at " + f.label + " is outside the root lattice");
  }

  // The sign decisions are read from the moment values; they must be
  // nonzero and off every span of fewer than l tangent weights.
  for (const auto& f : p.fixed_points) {
    if (is_zero(f.moment)) fail(ErrorKind::SingularValue, "moment value zero at " + f.label);
    if (l < 2) continue;
    std::vector<std::size_t> pick(l - 1);
    const std::size_t n_w = f.tangent_weights.size();
    if (n_w < l - 1) continue;
    auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
      if (pos == pick.size()) {
        std::vector<Vec> cols;
        for (auto i : pick) cols.push_back(f.tangent_weights[i]);
        std::size_t base = Matrix::from_columns(cols).rank();
        cols.push_back(f.moment);
        if (Matrix::from_columns(cols).rank() == base)
          fail(ErrorKind::SingularValue, "moment value at " + f.label + " lies on a wall");
        return;
      }
      for (std::size_t i = start; i < n_w; ++i) {
        pick[pos] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
}

Vec cone_direction(const RootSystem& rs, const std::vector<Vec>& weights, std::uint64_t seed) {
  std::vector<long> xi = default_direction(rs);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (unsigned attempt = 0; attempt < 64; ++attempt) {
    Vec v;
    for (long x : xi) v.emplace_back(x);
    if (std::all_of(weights.begin(), weights.end(), [&](const Vec& w) { return dot(w, v) != 0; })) return v;
    for (auto& x : xi) x = static_cast<long>(rng() % 19) - 9;
  }
  fail(ErrorKind::NonGeneric, "no direction generic for the tangent weights");
}

}  // namespace

ResidueResult fibration_residue_raw(const FibrationProblem& problem, const RootSystem& rs,
                                    const ResidueOptions& options) {
  check_problem(problem, rs);
  const std::size_t l = rs.rank();
  const long m = static_cast<long>(rs.num_positive_roots());
  const long n = static_cast<long>(problem.fixed_points.front().tangent_weights.size());
  const long trunc = n - static_cast<long>(l) - m;

  ResidueResult empty;
  empty.value = 0;
  empty.seed = options.seed;
  if (trunc < 0) return empty;
  const unsigned t = static_cast<unsigned>(trunc);

  const Vec level_amb = rs.ambient(problem.level);
  const Rational k(problem.k);
  const Polynomial roots = positive_root_product(rs);

  // Weyl part of the Todd correction: prod over positive roots of the squared
  // ratio (e^{g/2} - e^{-g/2}) / g.
  TruncatedSeries units = TruncatedSeries::constant(l, 1, t);
  for (const auto& g : rs.positive_root_forms()) {
    TruncatedSeries s = sinh_ratio(g, t);
    units *= s * s;
  }

  std::vector<TruncatedSeries> orbit_todd;
  std::vector<Vec> level_moments;
  for (const auto& w : rs.weyl_group()) {
    TruncatedSeries s = TruncatedSeries::constant(l, 1, t);
    for (const auto& g : rs.positive_roots()) s *= todd_linear(-rs.labels(w.matrix * g), t);
    orbit_todd.push_back(s);
    level_moments.push_back(rs.labels(w.matrix * level_amb));
  }

  std::vector<RatExpTerm> terms;
  std::vector<Vec> all_weights;
  for (const auto& f : problem.fixed_points) {
    TruncatedSeries point_todd = units;
    std::vector<DenominatorFactor> dens;
    for (const auto& w : f.tangent_weights) {
      point_todd *= todd_linear(w, t);
      dens.push_back({w, 1});
      if (std::find(all_weights.begin(), all_weights.end(), w) == all_weights.end()) all_weights.push_back(w);
    }
    for (std::size_t s = 0; s < rs.weyl_group().size(); ++s) {
      const auto& sigma = rs.weyl_group()[s];
      Polynomial num = roots * (point_todd * orbit_todd[s]).polynomial() * Rational(sigma.sign);
      const Vec main = k * f.moment;
      const Vec shift = -(k * level_moments[s]);
      terms.emplace_back(std::move(num), main + shift, dens, std::vector<Vec>{main, shift});
    }
  }
  terms = merge_terms(std::move(terms));

  const Cone cone = build_cone(all_weights, cone_direction(rs, all_weights, options.seed));
  return res_cone(terms, cone, options);
}

Rational calibrate(CalibrationRegistry& registry, const RootSystem& rs, const CalibrationCase& cc,
                   const ResidueOptions& options) {
  const Rational raw = fibration_residue_raw(cc.problem, rs, options).value;
  if (raw == 0) fail(ErrorKind::InternalInconsistency, "calibration case gives a zero residue");
  const Rational c = Rational(cc.expected) / raw;
  registry.freeze(rs.label(), c);
  return c;
}

FibrationResidueResult fibration_rr_residue(const FibrationProblem& problem, const RootSystem& rs,
                                            CalibrationRegistry& registry, const ResidueOptions& options) {
  if (!registry.constant(rs.label())) {
    auto cc = builtin_calibration_case(rs);
    if (!cc) fail(ErrorKind::Config, "no calibration case for " + rs.label() + "; supply one");
    calibrate(registry, rs, *cc, options);
  }
  const ResidueResult r = fibration_residue_raw(problem, rs, options);
  FibrationResidueResult out;
  out.raw = r.value;
  out.constant = *registry.constant(rs.label());
  out.value = out.constant * r.value;
  out.retries = r.retries;
  out.seed = r.seed;
  return out;
}

unsigned BaseIntersectionOracle::weighted_degree(const Exponents& e) const {
  unsigned d = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) d += e[i] * degrees[i];
  return d;
}

void BaseIntersectionOracle::validate() const {
  if (degrees.empty() || degrees.front() != 2) fail(ErrorKind::Input, "generator 0 must be the degree-2 symplectic class");
  if (names.size() != degrees.size()) fail(ErrorKind::Input, "generator names and degrees differ in length");
  if (degrees.size() > kMaxVars) fail(ErrorKind::Input, "too many generators");
  if (dimension % 2 != 0) fail(ErrorKind::Input, "base dimension must be even");
  if (todd.num_vars() != degrees.size()) fail(ErrorKind::Input, "Todd class is over the wrong generators");
  if (todd.constant_term() != 1) fail(ErrorKind::Input, "Todd class must start with 1");
  for (const auto& [e, v] : pairing)
    if (v != 0 && weighted_degree(e) != dimension)
      fail(ErrorKind::Input, "pairing is nonzero on a monomial of the wrong degree");
}

Rational BaseIntersectionOracle::pair(const Polynomial& p) const {
  Rational s = 0;
  for (const auto& [e, v] : pairing) s += p.coeff(e) * v;
  return s;
}

BaseIntersectionOracle point_oracle() {
  BaseIntersectionOracle o;
  o.dimension = 0;
  o.names = {"omega0"};
  o.degrees = {2};
  o.todd = Polynomial::constant(1, 1);
  o.pairing = {{Exponents{}, Rational(1)}};
  return o;
}

namespace {

// Product keeping only terms of weighted degree <= max_degree.
Polynomial weighted_product(const BaseIntersectionOracle& o, const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    if (o.weighted_degree(ea) > o.dimension) continue;
    for (const auto& [eb, cb] : b.terms())
      if (o.weighted_degree(ea + eb) <= o.dimension) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

}  // namespace

Rational fibration_rr_base(const BaseIntersectionOracle& oracle, const RootSystem& rs, const Weight& level, long k,
                           std::optional<unsigned> trunc_degree) {
  oracle.validate();
  if (k <= 0) fail(ErrorKind::Input, "k must be positive");
  if (level.size() != rs.rank()) fail(ErrorKind::Input, "level does not match the rank of " + rs.label());
  const Weight lam = Rational(k) * level;
  if (!lam.is_integral() || !lam.is_dominant())
    fail(ErrorKind::Input, "k*level (" + lam.to_string() + ") is not dominant integral");

  const unsigned n = trunc_degree.value_or(oracle.dimension / 2);
  const TruncatedSeries s = character_series(rs, DominantWeight(lam), n);
  const BasicInvariants basis = basic_invariants(rs, n);
  const Polynomial in_tau = express_in_invariants(basis, s.polynomial(), n);

  // tau_r -> generator r + 1 of the oracle.
  const std::size_t g = oracle.degrees.size();
  Polynomial mapped(g);
  for (const auto& [e, c] : in_tau.terms()) {
    Exponents out;
    for (std::size_t r = 0; r < basis.degrees.size(); ++r) {
      if (e[r] == 0) continue;
      if (r + 1 >= g || oracle.degrees[r + 1] != 2 * basis.degrees[r])
        fail(ErrorKind::GeneratorDeficiency, "oracle lacks a generator of degree " + std::to_string(2 * basis.degrees[r]));
      out[r + 1] = e[r];
    }
    mapped.add_term(out, c);
  }

  Polynomial symplectic(g);
  for (unsigned j = 0; 2 * j <= oracle.dimension; ++j) {
    Exponents e;
    e[0] = static_cast<std::uint16_t>(j);
    Rational c = 1 / factorial(j);
    for (unsigned i = 0; i < j; ++i) c *= k;
    symplectic.add_term(e, c);
  }
  return oracle.pair(weighted_product(oracle, weighted_product(oracle, symplectic, oracle.todd), mapped));
}

}  // namespace rrloc
