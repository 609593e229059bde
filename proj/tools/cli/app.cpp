#include "app.hpp"

#include <charconv>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "rrloc/charformula.hpp"
#include "rrloc/io.hpp"
#include "rrloc/oracle.hpp"
#include "verify.hpp"

namespace rrloc::cli {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonGeneric:
    case ErrorKind::Convergence:
      return 2;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::ExactDivision:
    case ErrorKind::CalibrationDrift:
      return 3;
    default:
      return 1;
  }
}

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json rational_json(const Rational& q) { return to_string(q); }

long parse_long(std::string_view text) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    fail(ErrorKind::Input, "expected an integer, got '" + std::string(text) + "'");
  return v;
}

std::vector<long> parse_levels(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return {parse_long(text)};
  const long lo = parse_long(text.substr(0, dots));
  const long hi = parse_long(text.substr(dots + 2));
  if (hi < lo) fail(ErrorKind::Input, "empty level range '" + std::string(text) + "'");
  std::vector<long> out;
  for (long k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

Json header(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["seed"] = c.seed;
  return j;
}

RootSystem group_of(const RunConfig& c) {
  if (c.group.empty()) fail(ErrorKind::Input, "--group is required");
  return build_root_system(c.group);
}

Weight weight_of(const RunConfig& c, const RootSystem& rs) {
  if (c.weight.empty()) fail(ErrorKind::Input, "--weight is required");
  Weight w = parse_weight(c.weight);
  if (w.size() != rs.rank())
    fail(ErrorKind::Input, "weight " + w.to_string() + " does not match the rank of " + rs.label());
  return w;
}

DominantWeight dominant_of(const RunConfig& c, const RootSystem& rs) {
  Weight w = weight_of(c, rs);
  if (!w.is_integral() || !w.is_dominant())
    fail(ErrorKind::Input, "weight " + w.to_string() + " is not dominant integral");
  return DominantWeight(w);
}

Json run_dim(const RunConfig& c) {
  const RootSystem rs = group_of(c);
  const DominantWeight lam = dominant_of(c, rs);
  Json j = header(c);
  j["group"] = rs.label();
  j["weight"] = lam.weight().to_string();
  j["dim"] = integer_json(weyl_dim(rs, lam));
  return j;
}

Json run_orbit_volume(const RunConfig& c) {
  const RootSystem rs = group_of(c);
  const Weight lam = weight_of(c, rs);
  Json j = header(c);
  j["group"] = rs.label();
  j["weight"] = lam.to_string();
  j["volume"] = rational_json(orbit_volume(rs, lam));
  return j;
}

Json run_character(const RunConfig& c) {
  const RootSystem rs = group_of(c);
  const DominantWeight lam = dominant_of(c, rs);
  const unsigned n = c.trunc.value_or(0);
  Json j = header(c);
  j["group"] = rs.label();
  j["weight"] = lam.weight().to_string();
  j["trunc"] = n;
  j["series"] = character_series(rs, lam, n).to_string();
  return j;
}

Json run_rr_orbit(const RunConfig& c) {
  const RootSystem rs = group_of(c);
  const DominantWeight lam = dominant_of(c, rs);
  Json j = header(c);
  j["group"] = rs.label();
  j["weight"] = lam.weight().to_string();
  const std::vector<long> ks = parse_levels(c.k.value_or("1"));
  Json results = Json::array();
  for (long k : ks) {
    if (k < 0) fail(ErrorKind::Input, "k must be nonnegative");
    Json r;
    r["k"] = k;
    r["rr"] = integer_json(rr_orbit_fixedpoint(rs, lam, static_cast<unsigned>(k), {c.seed, c.max_retries}));
    results.push_back(r);
  }
  if (ks.size() == 1) {
    j.update(results.front());
  } else {
    j["results"] = results;
  }
  return j;
}

Json run_jk_residue(const RunConfig& c) {
  if (c.input.empty()) fail(ErrorKind::Input, "--input is required");
  const JkProblem p = parse_jk_problem(read_text_file(c.input));
  std::vector<LinearForm> weights;
  for (const auto& t : p.terms)
    for (const auto& d : t.denominators()) weights.push_back(d.form);
  const Cone cone = build_cone(weights, p.xi);
  const ResidueResult r = res_cone(p.terms, cone, {c.max_retries, c.seed, p.coords});
  Json j = header(c);
  j["input"] = c.input.filename().string();
  j["value"] = rational_json(r.value);
  j["retries"] = r.retries;
  Json coords = Json::array();
  for (std::size_t col = 0; col < r.coords.cols(); ++col) {
    Json v = Json::array();
    for (const auto& q : r.coords.column(col)) v.push_back(rational_json(q));
    coords.push_back(v);
  }
  j["coords"] = coords;
  return j;
}

Json run_fibration(const RunConfig& c) {
  if (c.input.empty()) fail(ErrorKind::Input, "--input is required");
  if (c.route != "base" && c.route != "residue" && c.route != "both")
    fail(ErrorKind::Input, "route must be base, residue or both");
  const FibrationFixture f = parse_fibration_fixture(read_text_file(c.input));
  const RootSystem rs = build_root_system(f.group);
  const bool want_base = c.route != "residue";
  const bool want_residue = c.route != "base";
  if (want_base && !f.base) fail(ErrorKind::Config, f.name + " has no base intersection data");

  CalibrationRegistry registry;
  const ResidueOptions ro{c.max_retries, c.seed, std::nullopt};
  if (want_residue && !c.fixture_dir.empty() && std::filesystem::is_directory(c.fixture_dir))
    calibrate_from_fixtures(registry, rs, load_fibration_fixtures(c.fixture_dir), ro);

  const std::vector<long> ks = c.k ? parse_levels(*c.k) : f.ks;
  Json j = header(c);
  j["fixture"] = f.name;
  j["group"] = rs.label();
  j["level"] = f.level.to_string();
  j["route"] = c.route;
  Json results = Json::array();
  for (long k : ks) {
    Json r;
    r["k"] = k;
    Rational base, residue;
    if (want_base) {
      base = fibration_rr_base(*f.base, rs, f.level, k, c.trunc);
      r["base"] = rational_json(base);
    }
    if (want_residue) {
      const FibrationResidueResult res = fibration_rr_residue(problem_at(f, k), rs, registry, ro);
      residue = res.value;
      r["residue"] = rational_json(res.value);
      r["raw"] = rational_json(res.raw);
      r["constant"] = rational_json(res.constant);
      r["retries"] = res.retries;
    }
    if (want_base && want_residue) {
      r["difference"] = rational_json(base - residue);
      if (base != residue && !c.trunc)
        fail(ErrorKind::InternalInconsistency, f.name + " at k=" + std::to_string(k) + ": base " +
                                                   to_string(base) + " differs from residue " + to_string(residue));
    }
    if (!f.factors.empty()) r["oracle"] = integer_json(fixture_oracle(rs, f, k));
    results.push_back(r);
  }
  j["results"] = results;
  return j;
}

Json run_verify(const RunConfig& c, bool& all_passed) {
  if (!is_suite(c.suite)) fail(ErrorKind::Input, "unknown suite '" + c.suite + "'");
  const auto checks = run_suite(c.suite, {c.fixture_dir, c.seed, c.max_retries});
  Json j = header(c);
  j["suite"] = c.suite;
  all_passed = true;
  Json arr = Json::array();
  for (const auto& r : checks) {
    all_passed = all_passed && r.passed;
    arr.push_back(Json{{"id", r.id}, {"criterion", r.criterion}, {"passed", r.passed}, {"detail", r.detail}});
  }
  j["passed"] = all_passed;
  j["checks"] = arr;
  return j;
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult out;
  try {
    Json j;
    bool passed = true;
    if (config.command == "dim") j = run_dim(config);
    else if (config.command == "orbit-volume") j = run_orbit_volume(config);
    else if (config.command == "character") j = run_character(config);
    else if (config.command == "rr-orbit") j = run_rr_orbit(config);
    else if (config.command == "jk-residue") j = run_jk_residue(config);
    else if (config.command == "fibration") j = run_fibration(config);
    else if (config.command == "verify") j = run_verify(config, passed);
    else fail(ErrorKind::Input, "unknown command '" + config.command + "'");
    out.output = j.dump(2);
    if (!passed) {
      out.exit_code = 3;
      out.diagnostic = "verification failed";
    }
  } catch (const Error& e) {
    Json j = header(config);
    j["error"] = Json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    out.output = j.dump(2);
    out.exit_code = exit_code_for(e.kind());
    out.diagnostic = std::string(to_string(e.kind())) + ": " + e.what();
  }
  return out;
}

}  // namespace rrloc::cli
