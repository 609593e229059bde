#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rrloc/rational.hpp"

namespace rrloc {

enum class CartanType { A, B, C, D, G };

/// Coordinates in the fundamental-weight basis (Dynkin labels).
class Weight {
 public:
  Weight() = default;
  explicit Weight(Vec labels) : labels_(std::move(labels)) {}

  const Vec& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const Rational& operator[](std::size_t i) const { return labels_[i]; }

  bool is_dominant() const;
  bool is_integral() const;
  bool is_zero() const { return rrloc::is_zero(labels_); }

  Weight operator+(const Weight& o) const { return Weight(labels_ + o.labels_); }
  Weight operator-(const Weight& o) const { return Weight(labels_ - o.labels_); }
  bool operator==(const Weight&) const = default;

  std::string to_string() const;

 private:
  Vec labels_;
};

Weight operator*(const Rational& s, const Weight& w);

/// Dominant integral weight; validated on construction.
class DominantWeight {
 public:
  explicit DominantWeight(Weight w);
  DominantWeight(std::initializer_list<long> labels);

  const Weight& weight() const { return weight_; }
  const Vec& labels() const { return weight_.labels(); }
  operator const Weight&() const { return weight_; }  // NOLINT

 private:
  Weight weight_;
};

Weight parse_weight(std::string_view text);

struct WeylElement {
  std::vector<unsigned> reduced_word;
  Matrix matrix;
  unsigned length = 0;
  int sign = 1;
};

class RootSystem {
 public:
  CartanType type() const { return type_; }
  unsigned rank() const { return rank_; }
  std::string label() const;
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Vec>& simple_roots() const { return simple_roots_; }
  const std::vector<Vec>& simple_coroots() const { return simple_coroots_; }
  /// Positive roots ordered by height.
  const std::vector<Vec>& positive_roots() const { return positive_roots_; }
  const std::vector<Vec>& fundamental_weights() const { return fundamental_weights_; }
  const Vec& rho() const { return rho_; }
  /// Integer lattice basis (the simple coroots).
  const std::vector<Vec>& integer_lattice_basis() const { return simple_coroots_; }
  const Matrix& cartan_matrix() const { return cartan_; }
  const std::vector<WeylElement>& weyl_group() const { return weyl_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }

  Rational pairing(const Vec& u, const Vec& v) const;
  Vec coroot(const Vec& root) const;

  /// Ambient vector of a weight given by Dynkin labels.
  Vec ambient(const Weight& w) const;
  /// Dynkin labels of an ambient vector; also its linear form in X.
  Vec labels(const Vec& ambient) const;
  /// Coefficients of an ambient vector in the simple-root basis.
  Vec root_coordinates(const Vec& ambient) const;

  /// Linear forms of the positive roots in the X coordinates.
  std::vector<Vec> positive_root_forms() const;
  /// Images of x_1..x_l under the substitution X -> wX.
  std::vector<Vec> substitution(const WeylElement& w) const;

  friend RootSystem build_root_system(CartanType type, unsigned rank);

 private:
  RootSystem() = default;

  CartanType type_ = CartanType::A;
  unsigned rank_ = 0;
  std::size_t ambient_dim_ = 0;
  Rational scale_ = 1;
  std::vector<Vec> simple_roots_;
  std::vector<Vec> simple_coroots_;
  std::vector<Vec> positive_roots_;
  std::vector<Vec> fundamental_weights_;
  Vec rho_;
  Matrix cartan_;
  Matrix cartan_transpose_inverse_;
  std::vector<WeylElement> weyl_;
};

/// Supported: A1-A4, B2-B4, C2-C4, D4, G2. Anything else is a config error.
RootSystem build_root_system(CartanType type, unsigned rank);
/// Accepts labels such as "A2", "B3", "G2".
RootSystem build_root_system(std::string_view label);

const std::vector<WeylElement>& enumerate_weyl_group(const RootSystem& rs);
Vec weyl_act(const WeylElement& w, const Vec& v);

}  // namespace rrloc
