#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrloc/fixedpoint.hpp"
#include "rrloc/jkresidue.hpp"

namespace rrloc {

std::string read_text_file(const std::filesystem::path& path);

/// {"vars": l, "terms": [{"num": poly, "phase": [..], "dens": [[form, mult], ...]}],
///  "xi": [..], "coords": [[..], ..]}; coords (columns) are optional.
struct JkProblem {
  std::size_t vars = 0;
  std::vector<RatExpTerm> terms;
  Vec xi;
  std::optional<Matrix> coords;
};
JkProblem parse_jk_problem(std::string_view json_text);

std::vector<FixedPointDatum> parse_fixed_points(std::string_view json_text);
std::string fixed_points_to_json(const std::vector<FixedPointDatum>& data);

/// {"dim", "generators": [{"name", "degree"}], "todd": [{"mono", "coeff"}],
///  "pairing": [{"mono", "value"}]}
BaseIntersectionOracle parse_base_oracle(std::string_view json_text);

/// A worked fibration example shipped as a data file.
struct FibrationFixture {
  std::string name;
  std::string group;
  Weight level;
  std::vector<long> ks;
  std::vector<Weight> factors;  // orbit weights of M, when M is a product of orbits
  std::vector<FixedPointDatum> fixed_points;
  std::optional<BaseIntersectionOracle> base;
  bool calibration = false;
  std::optional<Integer> expected;  // for calibration fixtures
};
FibrationFixture parse_fibration_fixture(std::string_view json_text);

}  // namespace rrloc
