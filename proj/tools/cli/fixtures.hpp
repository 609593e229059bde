#pragma once

#include <filesystem>
#include <vector>

#include "rrloc/fixedpoint.hpp"
#include "rrloc/io.hpp"

namespace rrloc::cli {

/// Every *.json fibration fixture in dir, ordered by file name.
std::vector<FibrationFixture> load_fibration_fixtures(const std::filesystem::path& dir);

/// Freezes the constant of every calibration fixture for rs found in dir.
void calibrate_from_fixtures(CalibrationRegistry& registry, const RootSystem& rs,
                             const std::vector<FibrationFixture>& fixtures, const ResidueOptions& options);

FibrationProblem problem_at(const FibrationFixture& fixture, long k);

/// Tensor-product multiplicity for a fixture whose space is a product of orbits.
Integer fixture_oracle(const RootSystem& rs, const FibrationFixture& fixture, long k);

}  // namespace rrloc::cli
