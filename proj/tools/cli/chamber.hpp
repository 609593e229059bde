#pragma once

#include <vector>

#include "rrloc/rational.hpp"

namespace rrloc::cli {

/// Density at p of the pushforward of Lebesgue measure on the nonnegative
/// orthant under t -> sum_i t_i * weights[i], for 2-dimensional weights.
/// The weights must span the plane and lie in an open half-plane; at most
/// four are supported.
Rational chamber_volume(const std::vector<Vec>& weights, const Vec& p);

}  // namespace rrloc::cli
