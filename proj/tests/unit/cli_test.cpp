#include <gtest/gtest.h>

#include "printers.hpp"

#include <nlohmann/json.hpp>

#include "app.hpp"
#include "rrloc/io.hpp"

using rrloc::cli::RunConfig;
using rrloc::cli::run;

namespace {

const std::filesystem::path kGolden = RRLOC_GOLDEN_DIR;
const std::filesystem::path kData = RRLOC_DATA_DIR;

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  c.fixture_dir = RRLOC_FIXTURE_DIR;
  return c;
}

void expect_golden(const RunConfig& c, const char* golden) {
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 0) << r.diagnostic;
  EXPECT_EQ(r.output + "\n", rrloc::read_text_file(kGolden / golden)) << golden;
}

}  // namespace

TEST(Cli, Goldens) {
  auto c = config("dim");
  c.group = "A2";
  c.weight = "1,1";
  expect_golden(c, "dim_a2.json");

  c = config("character");
  c.group = "G2";
  c.weight = "1,0";
  c.trunc = 4;
  expect_golden(c, "character_g2.json");

  c = config("rr-orbit");
  c.group = "B2";
  c.weight = "1,1";
  c.k = "0..4";
  expect_golden(c, "rr_orbit_b2.json");

  c = config("orbit-volume");
  c.group = "A2";
  c.weight = "2,1";
  expect_golden(c, "orbit_volume_a2.json");

  c = config("jk-residue");
  c.input = kData / "jk" / "two_var_simplex.json";
  expect_golden(c, "jk_two_var_simplex.json");

  c = config("fibration");
  c.input = kData / "fixtures" / "su2_five_spin3.json";
  c.route = "residue";
  expect_golden(c, "fibration_five_spin3.json");

  c = config("fibration");
  c.input = kData / "fixtures" / "su2_three_minimal.json";
  expect_golden(c, "fibration_three_minimal.json");

  c = config("verify");
  c.suite = "residue";
  expect_golden(c, "verify_residue.json");
}

TEST(Cli, DeterministicAcrossRuns) {
  auto c = config("fibration");
  c.input = kData / "fixtures" / "su2_three_spin3.json";
  c.seed = 42;
  EXPECT_EQ(run(c).output, run(c).output);
  const auto values = [&](std::uint64_t seed) {
    c.seed = seed;
    auto j = nlohmann::json::parse(run(c).output);
    EXPECT_EQ(j["seed"], seed);
    std::vector<std::string> out;
    for (const auto& r : j["results"]) out.push_back(r["residue"]);
    return out;
  };
  EXPECT_EQ(values(1), values(99));
}

TEST(Cli, ExitCodes) {
  auto c = config("dim");
  c.group = "E8";
  c.weight = "1";
  EXPECT_EQ(run(c).exit_code, 1);

  c = config("dim");
  c.group = "A2";
  c.weight = "1,-1";
  EXPECT_EQ(run(c).exit_code, 1);

  c = config("fibration");
  c.input = kData / "invalid" / "singular_su2_two_minimal.json";
  c.route = "residue";
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.output + "\n", rrloc::read_text_file(kGolden / "error_singular.json"));

  c = config("jk-residue");
  c.input = kData / "jk" / "missing.json";
  EXPECT_EQ(run(c).exit_code, 1);

  c = config("verify");
  c.suite = "nonsense";
  EXPECT_EQ(run(c).exit_code, 1);

  EXPECT_EQ(rrloc::cli::exit_code_for(rrloc::ErrorKind::NonGeneric), 2);
  EXPECT_EQ(rrloc::cli::exit_code_for(rrloc::ErrorKind::Convergence), 2);
  EXPECT_EQ(rrloc::cli::exit_code_for(rrloc::ErrorKind::CalibrationDrift), 3);
  EXPECT_EQ(rrloc::cli::exit_code_for(rrloc::ErrorKind::InternalInconsistency), 3);
  EXPECT_EQ(rrloc::cli::exit_code_for(rrloc::ErrorKind::GeneratorDeficiency), 1);
}

TEST(Cli, FibrationBaseRouteNeedsBaseData) {
  auto c = config("fibration");
  c.input = kData / "fixtures" / "su2_three_spin3.json";
  c.route = "base";
  EXPECT_EQ(run(c).exit_code, 1);
}
