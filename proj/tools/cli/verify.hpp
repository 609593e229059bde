#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rrloc::cli {

struct CheckResult {
  std::string id;
  int criterion = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::filesystem::path fixture_dir;
  std::uint64_t seed = 0;
  unsigned max_retries = 8;
};

/// Suites: bwb, identity, residue, fibration, asymptotics, all.
bool is_suite(std::string_view suite);
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options);
/// Every check attached to one acceptance criterion (1-9).
std::vector<CheckResult> run_criterion(int criterion, const VerifyOptions& options);

}  // namespace rrloc::cli
