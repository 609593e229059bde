#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "rrloc/error.hpp"

namespace rrloc::cli {

struct RunConfig {
  std::string command;  // dim, orbit-volume, character, rr-orbit, jk-residue, fibration, verify
  std::string group;
  std::string weight;
  std::optional<std::string> k;  // single level "3" or inclusive range "1..6"
  std::optional<unsigned> trunc;
  std::filesystem::path input;
  std::string route = "both";  // base, residue, both
  std::string suite = "all";
  std::filesystem::path fixture_dir;
  std::uint64_t seed = 0;
  unsigned max_retries = 8;
};

struct RunResult {
  int exit_code = 0;
  std::string output;      // one JSON document
  std::string diagnostic;  // human-readable message for stderr, empty on success
};

/// 1: bad input or mathematically invalid request, 2: genericity retries
/// exhausted, 3: an internal identity or calibration failed.
int exit_code_for(ErrorKind kind);

RunResult run(const RunConfig& config);

}  // namespace rrloc::cli
