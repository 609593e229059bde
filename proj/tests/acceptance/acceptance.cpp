// One PASS/FAIL line per acceptance criterion. Every comparison is exact
// rational equality; the only tolerances are the wall-clock budgets below.
#include <chrono>
#include <cstdio>
#include <string>

#include "verify.hpp"

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr unsigned kMaxRetries = 8;

// Seconds allowed per criterion.
constexpr double kBudget[10] = {0, 60, 60, 60, 60, 30, 60, 30, 60, 30};

const char* kTitle[10] = {
    "",
    "localization sum equals the representation dimension (A1 A2 B2 G2, labels <= 3, k <= 4)",
    "character series constant term equals the dimension",
    "per-fixed-point localization identity through degree 8",
    "flag-manifold integral of the root product equals |W|",
    "base route, residue route and tensor oracle agree on three minimal su(2) orbits",
    "leading coefficient in k equals the orbit volume",
    "iterated residue equals the chamber volume on 20 seeded planar problems",
    "Riemann-Roch values are polynomials in k of the predicted degree",
    "one residue constant across every fibration case, drift refused",
};

}  // namespace

int main() {
  const rrloc::cli::VerifyOptions options{RRLOC_FIXTURE_DIR, kSeed, kMaxRetries};
  int failures = 0;
  for (int criterion = 1; criterion <= 9; ++criterion) {
    const auto start = std::chrono::steady_clock::now();
    const auto checks = rrloc::cli::run_criterion(criterion, options);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool passed = !checks.empty() && seconds <= kBudget[criterion];
    std::string detail;
    for (const auto& c : checks) {
      passed = passed && c.passed;
      if (!detail.empty()) detail += "; ";
      detail += c.id + " " + (c.passed ? "ok" : "FAILED") + " (" + c.detail + ")";
    }
    if (!passed) ++failures;
    std::printf("criterion %d: %s  %s  [%s] %.2fs of %.0fs\n", criterion, passed ? "PASS" : "FAIL",
                kTitle[criterion], detail.c_str(), seconds, kBudget[criterion]);
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
