#pragma once

#include <map>
#include <vector>

#include "rrloc/rootsys.hpp"

namespace rrloc {

/// Integer Dynkin labels.
using Labels = std::vector<long>;
/// Formal character: weight -> multiplicity.
using Character = std::map<Labels, Integer>;

/// Weight multiplicities of V_lam by Freudenthal's recursion. Keeps no
/// reference to the root system.
class WeightMultiplicities {
 public:
  WeightMultiplicities(const RootSystem& rs, const DominantWeight& lam);

  Integer multiplicity(const Labels& mu);
  /// Every weight of V_lam with its multiplicity.
  Character character();
  Integer dimension();

 private:
  Labels dominant_conjugate(Labels mu) const;
  bool below_highest(const Labels& dominant) const;
  Rational form(const Labels& a, const Labels& b) const;

  Labels highest_;
  Matrix cartan_;
  Matrix gram_;  // pairing of fundamental weights
  Matrix cartan_transpose_inverse_;
  std::vector<Labels> positive_roots_;
  std::map<Labels, Integer> dominant_mults_;
};

Labels to_labels(const Weight& w);

Character tensor_character(const RootSystem& rs, const std::vector<DominantWeight>& factors);

/// Multiplicity of V_target in the tensor product of the V_factor.
Integer tensor_multiplicity_oracle(const RootSystem& rs, const std::vector<DominantWeight>& factors,
                                   const DominantWeight& target);

}  // namespace rrloc
