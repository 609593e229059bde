#include "verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "chamber.hpp"
#include "fixtures.hpp"
#include "rrloc/charformula.hpp"
#include "rrloc/error.hpp"
#include "rrloc/oracle.hpp"

namespace rrloc::cli {

namespace {

const std::vector<std::string> kSweepGroups = {"A1", "A2", "B2", "G2"};
constexpr long kMaxLabel = 3;
constexpr unsigned kMaxLevel = 4;
constexpr unsigned kIdentityTrunc = 8;
constexpr int kChamberProblems = 20;

std::vector<DominantWeight> labels_up_to(unsigned rank, long max_label, long min_label = 0) {
  std::vector<DominantWeight> out;
  std::vector<long> cur(rank, min_label);
  while (true) {
    Vec v;
    for (long c : cur) v.push_back(c);
    out.emplace_back(Weight(v));
    std::size_t i = 0;
    while (i < rank && ++cur[i] > max_label) cur[i++] = min_label;
    if (i == rank) break;
  }
  return out;
}

// Forward differences of order `order`, the list shrinking by one each time.
std::vector<Rational> differences(std::vector<Rational> values, unsigned order) {
  for (unsigned o = 0; o < order && !values.empty(); ++o) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return values;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& q : v)
    if (q != 0) return false;
  return true;
}

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  CheckResult result(std::string id, int criterion) const {
    std::ostringstream os;
    os << cases - failures << "/" << cases << " cases agree";
    if (failures) os << "; first mismatch: " << first_failure;
    return {std::move(id), criterion, failures == 0 && cases > 0, os.str()};
  }
};

// Runs body and converts a library error into a failed check.
CheckResult guarded(std::string id, int criterion, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return {std::move(id), criterion, false, std::string(to_string(e.kind())) + ": " + e.what()};
  }
}

CheckResult check_rr_orbit_sweep(const VerifyOptions& opt) {
  return guarded("bwb.rr-orbit", 1, [&] {
    Tally t;
    for (const auto& g : kSweepGroups) {
      const RootSystem rs = build_root_system(g);
      for (const auto& lam : labels_up_to(rs.rank(), kMaxLabel)) {
        for (unsigned k = 0; k <= kMaxLevel; ++k) {
          const DominantWeight klam(Rational(k) * lam.weight());
          const Integer rr = rr_orbit_fixedpoint(rs, lam, k, {opt.seed, opt.max_retries});
          const Integer dim = WeightMultiplicities(rs, klam).dimension();
          const Integer self = tensor_multiplicity_oracle(rs, {klam}, klam);
          std::ostringstream what;
          what << g << " " << lam.weight().to_string() << " k=" << k << ": rr " << rr << ", oracle dim " << dim
               << ", Weyl dim " << weyl_dim(rs, klam) << ", self-multiplicity " << self;
          t.record(rr == dim && dim == weyl_dim(rs, klam) && self == 1, what.str());
        }
      }
    }
    return t.result("bwb.rr-orbit", 1);
  });
}

CheckResult check_character_constant(const VerifyOptions&) {
  return guarded("bwb.character-constant", 2, [&] {
    Tally t;
    for (const auto& g : kSweepGroups) {
      const RootSystem rs = build_root_system(g);
      for (const auto& lam : labels_up_to(rs.rank(), kMaxLabel)) {
        const Rational c = character_series(rs, lam, 0).constant_term();
        const Integer dim = WeightMultiplicities(rs, lam).dimension();
        t.record(c == Rational(dim), g + " " + lam.weight().to_string() + ": constant term " + to_string(c) +
                                         ", dimension " + dim.get_str());
      }
    }
    return t.result("bwb.character-constant", 2);
  });
}

CheckResult check_localization_identity(const VerifyOptions&) {
  return guarded("identity.localization", 3, [&] {
    Tally t;
    for (const auto& g : kSweepGroups) {
      const RootSystem rs = build_root_system(g);
      for (const auto& w : rs.weyl_group()) {
        std::ostringstream what;
        what << g << " w of length " << w.length;
        t.record(s4_identity_check(rs, w, kIdentityTrunc), what.str());
      }
    }
    return t.result("identity.localization", 3);
  });
}

CheckResult check_top_integral(const VerifyOptions&) {
  return guarded("identity.top-integral", 4, [&] {
    Tally t;
    for (const char* g : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
      const RootSystem rs = build_root_system(g);
      const Rational top = gt_integrate(rs, positive_root_product(rs));
      t.record(top == Rational(static_cast<long>(rs.weyl_group().size())),
               std::string(g) + ": " + to_string(top) + " vs |W| " + std::to_string(rs.weyl_group().size()));
    }
    return t.result("identity.top-integral", 4);
  });
}

CheckResult check_routes_agree(const VerifyOptions& opt) {
  return guarded("fibration.routes-agree", 5, [&] {
    Tally t;
    const auto fixtures = load_fibration_fixtures(opt.fixture_dir);
    const RootSystem rs = build_root_system("A1");
    CalibrationRegistry registry;
    const ResidueOptions ro{opt.max_retries, opt.seed, std::nullopt};
    calibrate_from_fixtures(registry, rs, fixtures, ro);
    for (const auto& f : fixtures) {
      if (f.name != "su2_three_minimal") continue;
      for (long k : f.ks) {
        const Rational base = fibration_rr_base(*f.base, rs, f.level, k);
        const Rational res = fibration_rr_residue(problem_at(f, k), rs, registry, ro).value;
        const Integer oracle = fixture_oracle(rs, f, k);
        std::ostringstream what;
        what << f.name << " k=" << k << ": base " << base << ", residue " << res << ", oracle " << oracle;
        t.record(base == res && res == Rational(oracle) && oracle == k + 1, what.str());
      }
    }
    return t.result("fibration.routes-agree", 5);
  });
}

CheckResult check_leading_coefficient(const VerifyOptions&) {
  return guarded("asymptotics.leading-coefficient", 6, [&] {
    Tally t;
    for (const auto& g : kSweepGroups) {
      const RootSystem rs = build_root_system(g);
      for (const auto& lam : labels_up_to(rs.rank(), kMaxLabel, 1)) {
        const Rational lead = rr_leading_coefficient(rs, lam);
        const Rational vol = orbit_volume(rs, lam);
        t.record(lead == vol, g + " " + lam.weight().to_string() + ": leading " + to_string(lead) + ", volume " +
                                  to_string(vol));
      }
    }
    return t.result("asymptotics.leading-coefficient", 6);
  });
}

struct PlanarProblem {
  std::vector<Vec> weights;
  Vec phase;
  Vec xi;
};

bool parallel(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0] == 0; }

PlanarProblem random_planar_problem(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-3, 3), count(2, 4), coeff(1, 4);
  PlanarProblem p;
  do p.xi = {entry(rng), entry(rng)};
  while (is_zero(p.xi));
  const long n = count(rng);
  while (true) {
    p.weights.clear();
    while (static_cast<long>(p.weights.size()) < n) {
      Vec w{entry(rng), entry(rng)};
      if (dot(w, p.xi) <= 0) continue;
      bool fresh = true;
      for (const auto& u : p.weights) fresh = fresh && !parallel(u, w);
      if (fresh) p.weights.push_back(w);
    }
    p.phase = Vec{0, 0};
    for (const auto& w : p.weights) p.phase = p.phase + Rational(coeff(rng)) * w;
    bool generic = true;
    for (const auto& w : p.weights) generic = generic && !parallel(w, p.phase);
    if (generic) return p;
  }
}

CheckResult check_chamber_volume(const VerifyOptions& opt) {
  return guarded("residue.chamber-volume", 7, [&] {
    Tally t;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < kChamberProblems; ++i) {
      const PlanarProblem p = random_planar_problem(rng);
      std::vector<DenominatorFactor> dens;
      for (const auto& w : p.weights) dens.push_back({w, 1});
      const std::vector<RatExpTerm> terms{RatExpTerm(Polynomial::constant(2, 1), p.phase, dens)};
      const Cone cone = build_cone(p.weights, p.xi);
      const Rational res = res_cone(terms, cone, {opt.max_retries, opt.seed + static_cast<std::uint64_t>(i), {}}).value;
      const Rational vol = chamber_volume(p.weights, p.phase);
      std::ostringstream what;
      what << "problem " << i << " (" << p.weights.size() << " weights, phase " << to_string(p.phase[0]) << ","
           << to_string(p.phase[1]) << "): residue " << res << ", volume " << vol;
      t.record(res == vol, what.str());
    }
    return t.result("residue.chamber-volume", 7);
  });
}

// Reduced spaces of the fixtures have complex dimension d; their Riemann-Roch
// numbers are degree-d polynomials in k.
CheckResult check_fibration_polynomial(const VerifyOptions& opt) {
  return guarded("fibration.polynomial-in-k", 8, [&] {
    Tally t;
    const auto fixtures = load_fibration_fixtures(opt.fixture_dir);
    const RootSystem rs = build_root_system("A1");
    CalibrationRegistry registry;
    const ResidueOptions ro{opt.max_retries, opt.seed, std::nullopt};
    calibrate_from_fixtures(registry, rs, fixtures, ro);
    for (const auto& f : fixtures) {
      if (f.calibration || f.group != "A1" || f.ks.size() < 3) continue;
      const long n_w = static_cast<long>(f.fixed_points.front().tangent_weights.size());
      const long d = n_w - static_cast<long>(rs.rank() + rs.num_positive_roots());
      std::vector<Rational> residue, base;
      for (long k : f.ks) {
        residue.push_back(fibration_rr_residue(problem_at(f, k), rs, registry, ro).value);
        if (f.base) base.push_back(fibration_rr_base(*f.base, rs, f.level, k, 1));
      }
      if (static_cast<long>(f.ks.size()) < d + 2) continue;
      const auto top = differences(residue, static_cast<unsigned>(d));
      t.record(all_zero(differences(residue, static_cast<unsigned>(d + 1))) && !all_zero(top),
               f.name + ": residue values not of degree " + std::to_string(d));
      if (f.base)
        t.record(all_zero(differences(base, 2)), f.name + ": base values at truncation 1 not of degree 1");
    }
    return t.result("fibration.polynomial-in-k", 8);
  });
}

CheckResult check_orbit_polynomial(const VerifyOptions& opt) {
  return guarded("asymptotics.polynomial-in-k", 8, [&] {
    Tally t;
    for (const auto& g : kSweepGroups) {
      const RootSystem rs = build_root_system(g);
      const unsigned m = static_cast<unsigned>(rs.num_positive_roots());
      for (const auto& lam : labels_up_to(rs.rank(), 2, 1)) {
        std::vector<Rational> values;
        for (unsigned k = 0; k <= m + 2; ++k)
          values.push_back(Rational(rr_orbit_fixedpoint(rs, lam, k, {opt.seed, opt.max_retries})));
        const auto top = differences(values, m);
        t.record(all_zero(differences(values, m + 1)) && !all_zero(top) && top.front() > 0,
                 g + " " + lam.weight().to_string() + ": not of degree " + std::to_string(m));
      }
    }
    return t.result("asymptotics.polynomial-in-k", 8);
  });
}

// One constant across every fixture and level, and a changed value is refused.
CheckResult check_calibration(const VerifyOptions& opt) {
  return guarded("fibration.calibration", 9, [&] {
    Tally t;
    const auto fixtures = load_fibration_fixtures(opt.fixture_dir);
    const RootSystem rs = build_root_system("A1");
    CalibrationRegistry registry;
    const ResidueOptions ro{opt.max_retries, opt.seed, std::nullopt};
    calibrate_from_fixtures(registry, rs, fixtures, ro);
    if (auto cc = builtin_calibration_case(rs)) calibrate(registry, rs, *cc, ro);
    const auto frozen = registry.constant(rs.label());
    t.record(frozen.has_value(), "no constant frozen for A1");
    if (!frozen) return t.result("fibration.calibration", 9);
    for (const auto& f : fixtures) {
      if (f.group != "A1" || f.factors.empty()) continue;
      for (long k : f.ks) {
        FibrationProblem problem = problem_at(f, k);
        const Rational raw = fibration_residue_raw(problem, rs, ro).value;
        const Integer oracle = fixture_oracle(rs, f, k);
        std::ostringstream what;
        what << f.name << " k=" << k << ": raw " << raw << ", oracle " << oracle << ", frozen " << *frozen;
        t.record(raw != 0 && Rational(oracle) / raw == *frozen, what.str());
      }
    }
    bool drift_caught = false;
    try {
      registry.freeze(rs.label(), *frozen + 1);
    } catch (const Error& e) {
      drift_caught = e.kind() == ErrorKind::CalibrationDrift;
    }
    t.record(drift_caught, "a changed constant was accepted");
    return t.result("fibration.calibration", 9);
  });
}

struct CheckSpec {
  const char* suite;
  int criterion;
  CheckResult (*run)(const VerifyOptions&);
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> specs = {
      {"bwb", 1, check_rr_orbit_sweep},
      {"bwb", 2, check_character_constant},
      {"identity", 3, check_localization_identity},
      {"identity", 4, check_top_integral},
      {"fibration", 5, check_routes_agree},
      {"asymptotics", 6, check_leading_coefficient},
      {"residue", 7, check_chamber_volume},
      {"fibration", 8, check_fibration_polynomial},
      {"asymptotics", 8, check_orbit_polynomial},
      {"fibration", 9, check_calibration},
  };
  return specs;
}

}  // namespace

bool is_suite(std::string_view suite) {
  if (suite == "all") return true;
  for (const auto& s : registry())
    if (suite == s.suite) return true;
  return false;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (!is_suite(suite)) fail(ErrorKind::Input, "unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  for (const auto& s : registry())
    if (suite == "all" || suite == s.suite) out.push_back(s.run(options));
  return out;
}

std::vector<CheckResult> run_criterion(int criterion, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (const auto& s : registry())
    if (s.criterion == criterion) out.push_back(s.run(options));
  return out;
}

}  // namespace rrloc::cli
