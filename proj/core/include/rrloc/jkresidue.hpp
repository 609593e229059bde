#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rrloc/polynomial.hpp"

namespace rrloc {

struct DenominatorFactor {
  LinearForm form;
  unsigned multiplicity = 1;
  bool operator==(const DenominatorFactor&) const = default;
};

/// q(X) e^{<phase,X>} / prod form_j(X)^{m_j}.
///
/// Denominator forms are kept primitive integral with a positive leading
/// entry; the scalars this removes are folded into the numerator.
///
/// Which poles a residue keeps is read from the phase. When sign covectors
/// are given, the first one with a nonzero entry in the residue variable
/// decides instead, so {main, shift} behaves like the phase main + eps*shift.
class RatExpTerm {
 public:
  RatExpTerm(Polynomial numerator, Vec phase, std::vector<DenominatorFactor> dens,
             std::vector<Vec> sign_covectors = {});

  std::size_t num_vars() const { return phase_.size(); }
  const Polynomial& numerator() const { return numerator_; }
  const Vec& phase() const { return phase_; }
  const std::vector<Vec>& sign_covectors() const { return sign_covectors_; }
  const std::vector<DenominatorFactor>& denominators() const { return dens_; }

  /// Same function written in y where X = coords * y.
  RatExpTerm change_coordinates(const Matrix& coords) const;
  RatExpTerm scaled(const Rational& s) const;

  bool same_shape(const RatExpTerm& o) const {
    return phase_ == o.phase_ && sign_covectors_ == o.sign_covectors_ && dens_ == o.dens_;
  }

 private:
  Polynomial numerator_;
  Vec phase_;
  std::vector<Vec> sign_covectors_;
  std::vector<DenominatorFactor> dens_;

  friend std::vector<RatExpTerm> merge_terms(std::vector<RatExpTerm> terms);
};

/// Adds numerators of terms with equal phase and denominators; drops zeros.
std::vector<RatExpTerm> merge_terms(std::vector<RatExpTerm> terms);

struct Cone {
  std::vector<LinearForm> weights;  // sign-adjusted, each positive on xi
  std::vector<int> flips;           // -1 where the input weight was negated
  Vec xi;
};

/// Throws NonGeneric if some weight vanishes on xi.
Cone build_cone(const std::vector<LinearForm>& weights, const Vec& xi);

/// One-variable residue res+ in the given variable, the others held fixed.
std::vector<RatExpTerm> res_plus_1d(const std::vector<RatExpTerm>& terms, std::size_t var);

/// Iterated residue in fixed coordinates (columns of `coords`), innermost in
/// the last coordinate, times |det coords|. No retries.
Rational res_in_coordinates(const std::vector<RatExpTerm>& terms, const Matrix& coords);

struct ResidueOptions {
  unsigned max_retries = 8;
  std::uint64_t seed = 0;
  std::optional<Matrix> coords;
};

struct ResidueResult {
  Rational value;
  unsigned retries = 0;
  std::uint64_t seed = 0;
  Matrix coords;
};

/// Iterated residue for the cone. The last coordinate vector is xi; on a
/// genericity or convergence failure, seeded pseudorandom coordinates are
/// tried up to max_retries times before NonGeneric is raised.
ResidueResult res_cone(const std::vector<RatExpTerm>& terms, const Cone& cone, const ResidueOptions& options = {});

/// True if every cone weight has positive last nonzero coordinate in `coords`.
bool coordinates_admissible(const Cone& cone, const Matrix& coords);

}  // namespace rrloc
