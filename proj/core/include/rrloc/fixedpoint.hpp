#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrloc/jkresidue.hpp"
#include "rrloc/rootsys.hpp"

namespace rrloc {

/// Isolated torus-fixed point. Covectors are written as linear forms in the
/// coordinates dual to the simple coroots (that is, as Dynkin labels).
struct FixedPointDatum {
  std::string label;
  Vec moment;
  std::vector<Vec> tangent_weights;
  Rational symplectic_exponent = 0;
};

/// One point per Weyl element: moment w*lam, tangent weights {w*gamma : gamma > 0}.
std::vector<FixedPointDatum> orbit_fixed_data(const RootSystem& rs, const Weight& lam);
/// Fixed points of a product of coadjoint orbits through the given weights.
std::vector<FixedPointDatum> product_fixed_data(const RootSystem& rs, const std::vector<Weight>& factors);

struct GenericityOptions {
  std::uint64_t seed = 0;
  unsigned max_retries = 8;
};

/// Riemann-Roch number of the flag manifold with line bundle k*lam, from the
/// fixed-point sum evaluated along a generic one-parameter subgroup.
Integer rr_orbit_fixedpoint(const RootSystem& rs, const DominantWeight& lam, unsigned k,
                            const GenericityOptions& options = {});

/// Leading coefficient of k -> rr_orbit_fixedpoint(rs, lam, k) by finite differences.
Rational rr_leading_coefficient(const RootSystem& rs, const DominantWeight& lam);

/// Checks sgn(w) prod 1/(1 - e^{-w gamma}) == e^{w rho} / prod (e^{gamma/2} - e^{-gamma/2})
/// through degree N once the common factor prod gamma is cleared.
bool s4_identity_check(const RootSystem& rs, const WeylElement& w, unsigned trunc_degree);

/// Normalizing constant of the residue route, frozen per root-system label.
class CalibrationRegistry {
 public:
  std::optional<Rational> constant(const std::string& signature) const;
  /// Freezes c; a different value for an already frozen signature raises CalibrationDrift.
  void freeze(const std::string& signature, const Rational& c);
  const std::map<std::string, Rational>& constants() const { return constants_; }

 private:
  std::map<std::string, Rational> constants_;
};

struct FibrationProblem {
  std::vector<FixedPointDatum> fixed_points;
  Weight level;  // the orbit O_level reduced against
  long k = 1;
};

struct CalibrationCase {
  FibrationProblem problem;
  Integer expected;
};

/// Known-answer case used to fix the residue constant; only A1 ships one.
std::optional<CalibrationCase> builtin_calibration_case(const RootSystem& rs);

struct FibrationResidueResult {
  Rational value;
  Rational raw;
  Rational constant;
  unsigned retries = 0;
  std::uint64_t seed = 0;
};

/// Uncalibrated iterated residue of the localization sum.
ResidueResult fibration_residue_raw(const FibrationProblem& problem, const RootSystem& rs,
                                    const ResidueOptions& options = {});

/// Freezes the constant for rs from a calibration case and returns it.
Rational calibrate(CalibrationRegistry& registry, const RootSystem& rs, const CalibrationCase& cc,
                   const ResidueOptions& options = {});

/// Riemann-Roch number of the reduced space by the residue route. Calibrates
/// from the built-in case when the registry has no constant for rs.
FibrationResidueResult fibration_rr_residue(const FibrationProblem& problem, const RootSystem& rs,
                                            CalibrationRegistry& registry, const ResidueOptions& options = {});

/// Intersection data on the base M0: generator 0 is the symplectic class
/// (degree 2), the rest stand for the images of the basic invariants.
struct BaseIntersectionOracle {
  unsigned dimension = 0;  // real dimension of M0
  std::vector<std::string> names;
  std::vector<unsigned> degrees;
  Polynomial todd;
  std::vector<std::pair<Exponents, Rational>> pairing;

  unsigned weighted_degree(const Exponents& e) const;
  /// Throws Input when the data is inconsistent.
  void validate() const;
  Rational pair(const Polynomial& p) const;
};

/// Riemann-Roch number of the reduced space by the base-integral route.
Rational fibration_rr_base(const BaseIntersectionOracle& oracle, const RootSystem& rs, const Weight& level, long k,
                           std::optional<unsigned> trunc_degree = std::nullopt);

/// Base oracle of a single point.
BaseIntersectionOracle point_oracle();

}  // namespace rrloc
