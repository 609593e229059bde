#pragma once

#include <vector>

#include "rrloc/polynomial.hpp"
#include "rrloc/rootsys.hpp"

namespace rrloc {

/// Average of p(wX) over the Weyl group.
Polynomial reynolds(const RootSystem& rs, const Polynomial& p);

/// Homogeneous generators of the Weyl-invariant polynomials in x_1..x_l, found
/// degree by degree up to max_degree.
struct BasicInvariants {
  std::vector<Polynomial> generators;
  std::vector<unsigned> degrees;
};

BasicInvariants basic_invariants(const RootSystem& rs, unsigned max_degree);

/// Writes an invariant polynomial of degree <= max_degree as a polynomial in
/// the generators (variable r stands for generator r). Throws
/// GeneratorDeficiency when no such expression exists.
Polynomial express_in_invariants(const BasicInvariants& basis, const Polynomial& p, unsigned max_degree);

/// Exponent vectors b with sum_r b_r * weights[r] == degree.
std::vector<Exponents> weighted_monomials(const std::vector<unsigned>& weights, unsigned degree);

}  // namespace rrloc
