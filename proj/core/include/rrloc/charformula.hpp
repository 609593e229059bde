#pragma once

#include "rrloc/rootsys.hpp"
#include "rrloc/truncseries.hpp"

namespace rrloc {

/// Dimension of the irreducible representation with highest weight lam.
Integer weyl_dim(const RootSystem& rs, const DominantWeight& lam);

/// prod <alpha, Lam> / prod <alpha, rho> over positive roots; Lam must be regular dominant.
Rational orbit_volume(const RootSystem& rs, const Weight& lam);

/// Character of V_lam as a power series in x_1..x_l (coordinates dual to the
/// simple coroots), known to degree N.
TruncatedSeries character_series(const RootSystem& rs, const DominantWeight& lam, unsigned trunc_degree);

}  // namespace rrloc
