#include "rrloc/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rrloc/error.hpp"

namespace rrloc {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Input, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Input, std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Input, std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorKind::Input, "expected an exact rational (integer or \"p/q\" string), got " + j.dump());
}

Vec vec(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Input, "expected an array, got " + j.dump());
  Vec v;
  for (const auto& x : j) v.push_back(rational(x));
  return v;
}

Exponents mono(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail(ErrorKind::Input, "monomial exponent list has the wrong length");
  Exponents e;
  for (std::size_t i = 0; i < n; ++i) {
    long a = j[i].get<long>();
    if (a < 0) fail(ErrorKind::Input, "negative exponent");
    e[i] = static_cast<std::uint16_t>(a);
  }
  return e;
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<FixedPointDatum> fixed_points_from(const json& arr) {
  if (!arr.is_array()) fail(ErrorKind::Input, "fixed points must be an array");
  std::vector<FixedPointDatum> out;
  for (const auto& p : arr) {
    FixedPointDatum d;
    d.label = p.value("label", "F" + std::to_string(out.size()));
    d.moment = vec(field(p, "moment"));
    for (const auto& w : field(p, "tangent_weights")) d.tangent_weights.push_back(vec(w));
    if (p.contains("symplectic_exponent")) d.symplectic_exponent = rational(p.at("symplectic_exponent"));
    out.push_back(std::move(d));
  }
  return out;
}

BaseIntersectionOracle base_oracle_from(const json& j) {
  BaseIntersectionOracle o;
  long dim = field(j, "dim").get<long>();
  if (dim < 0) fail(ErrorKind::Input, "negative base dimension");
  o.dimension = static_cast<unsigned>(dim);
  for (const auto& g : field(j, "generators")) {
    o.names.push_back(field(g, "name").get<std::string>());
    o.degrees.push_back(field(g, "degree").get<unsigned>());
  }
  const std::size_t n = o.degrees.size();
  o.todd = Polynomial(n);
  for (const auto& t : field(j, "todd")) o.todd.add_term(mono(field(t, "mono"), n), rational(field(t, "coeff")));
  for (const auto& p : field(j, "pairing")) o.pairing.emplace_back(mono(field(p, "mono"), n), rational(field(p, "value")));
  o.validate();
  return o;
}

}  // namespace

JkProblem parse_jk_problem(std::string_view json_text) {
  const json j = parse(json_text);
  JkProblem p;
  long vars = field(j, "vars").get<long>();
  if (vars < 1 || vars > static_cast<long>(kMaxVars)) fail(ErrorKind::Input, "vars out of range");
  p.vars = static_cast<std::size_t>(vars);
  for (const auto& t : field(j, "terms")) {
    Polynomial num = t.contains("num") ? parse_polynomial(t.at("num").get<std::string>(), p.vars)
                                       : Polynomial::constant(p.vars, 1);
    std::vector<DenominatorFactor> dens;
    for (const auto& d : field(t, "dens")) {
      if (!d.is_array() || d.size() != 2) fail(ErrorKind::Input, "denominator entries are [form, multiplicity]");
      long mult = d[1].get<long>();
      if (mult < 1) fail(ErrorKind::Input, "multiplicity must be at least 1");
      dens.push_back({vec(d[0]), static_cast<unsigned>(mult)});
    }
    p.terms.emplace_back(std::move(num), vec(field(t, "phase")), std::move(dens));
  }
  p.xi = vec(field(j, "xi"));
  if (p.xi.size() != p.vars) fail(ErrorKind::Input, "xi has the wrong dimension");
  if (j.contains("coords")) {
    std::vector<Vec> cols;
    for (const auto& c : j.at("coords")) cols.push_back(vec(c));
    if (cols.size() != p.vars) fail(ErrorKind::Input, "coords needs one vector per variable");
    p.coords = Matrix::from_columns(cols);
  }
  return p;
}

std::vector<FixedPointDatum> parse_fixed_points(std::string_view json_text) {
  const json j = parse(json_text);
  return fixed_points_from(j.is_object() ? field(j, "fixed_points") : j);
}

std::string fixed_points_to_json(const std::vector<FixedPointDatum>& data) {
  json arr = json::array();
  for (const auto& d : data) {
    json p = json::object();
    p["label"] = d.label;
    p["moment"] = vec_json(d.moment);
    json ws = json::array();
    for (const auto& w : d.tangent_weights) ws.push_back(vec_json(w));
    p["tangent_weights"] = ws;
    p["symplectic_exponent"] = to_string(d.symplectic_exponent);
    arr.push_back(p);
  }
  return arr.dump(2);
}

BaseIntersectionOracle parse_base_oracle(std::string_view json_text) { return base_oracle_from(parse(json_text)); }

FibrationFixture parse_fibration_fixture(std::string_view json_text) {
  const json j = parse(json_text);
  FibrationFixture f;
  f.name = field(j, "name").get<std::string>();
  f.group = field(j, "group").get<std::string>();
  f.level = Weight(vec(field(j, "level")));
  for (const auto& k : field(j, "k")) f.ks.push_back(k.get<long>());
  if (j.contains("factors"))
    for (const auto& w : j.at("factors")) f.factors.emplace_back(vec(w));
  f.fixed_points = fixed_points_from(field(j, "fixed_points"));
  if (j.contains("base_oracle")) f.base = base_oracle_from(j.at("base_oracle"));
  f.calibration = j.value("calibration", false);
  if (j.contains("expected")) {
    Rational e = rational(j.at("expected"));
    if (!is_integral(e)) fail(ErrorKind::Input, "expected value must be an integer");
    f.expected = e.get_num();
  }
  if (f.calibration && (!f.expected || f.ks.size() != 1))
    fail(ErrorKind::Input, "a calibration fixture needs a single k and an expected value");
  return f;
}

}  // namespace rrloc
