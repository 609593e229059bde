#include "fixtures.hpp"

#include <algorithm>

#include "rrloc/error.hpp"
#include "rrloc/oracle.hpp"

namespace rrloc::cli {

std::vector<FibrationFixture> load_fibration_fixtures(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) fail(ErrorKind::Config, "cannot list fixture directory " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<FibrationFixture> out;
  for (const auto& f : files) out.push_back(parse_fibration_fixture(read_text_file(f)));
  return out;
}

FibrationProblem problem_at(const FibrationFixture& fixture, long k) {
  return FibrationProblem{fixture.fixed_points, fixture.level, k};
}

void calibrate_from_fixtures(CalibrationRegistry& registry, const RootSystem& rs,
                             const std::vector<FibrationFixture>& fixtures, const ResidueOptions& options) {
  for (const auto& f : fixtures) {
    if (!f.calibration || f.group != rs.label()) continue;
    calibrate(registry, rs, CalibrationCase{problem_at(f, f.ks.front()), *f.expected}, options);
  }
}

Integer fixture_oracle(const RootSystem& rs, const FibrationFixture& fixture, long k) {
  if (fixture.factors.empty()) fail(ErrorKind::Config, fixture.name + " lists no orbit factors");
  std::vector<DominantWeight> scaled;
  for (const auto& w : fixture.factors) scaled.emplace_back(Rational(k) * w);
  return tensor_multiplicity_oracle(rs, scaled, DominantWeight(Rational(k) * fixture.level));
}

}  // namespace rrloc::cli
