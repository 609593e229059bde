#include "rrloc/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rrloc/error.hpp"

namespace rrloc {

bool Weight::is_dominant() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const Rational& q) { return q >= 0; });
}

bool Weight::is_integral() const { return rrloc::is_integral(labels_); }

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels_.size(); ++i) os << (i ? "," : "") << rrloc::to_string(labels_[i]);
  return os.str();
}

Weight operator*(const Rational& s, const Weight& w) { return Weight(s * w.labels()); }

DominantWeight::DominantWeight(Weight w) : weight_(std::move(w)) {
  if (!weight_.is_integral() || !weight_.is_dominant())
    fail(ErrorKind::Input, "weight (" + weight_.to_string() + ") is not dominant integral");
}

DominantWeight::DominantWeight(std::initializer_list<long> labels)
    : DominantWeight([&] {
        Vec v;
        for (long x : labels) v.emplace_back(x);
        return Weight(std::move(v));
      }()) {}

Weight parse_weight(std::string_view text) { return Weight(parse_rational_list(text)); }

namespace {

Vec unit(std::size_t dim, std::size_t i, long value = 1) {
  Vec v(dim, Rational(0));
  v[i] = value;
  return v;
}

Vec simple_difference(std::size_t dim, std::size_t i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  v[i + 1] = -1;
  return v;
}

Matrix reflection_matrix(const Vec& alpha) {
  // Orthogonal for the standard dot product, which is proportional to the pairing.
  const std::size_t n = alpha.size();
  Rational norm = 0;
  for (const auto& a : alpha) norm += a * a;
  Matrix m = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= 2 * alpha[r] * alpha[c] / norm;
  return m;
}

Vec matrix_key(const Matrix& m) {
  Vec key;
  key.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) key.push_back(m(r, c));
  return key;
}

bool supported(CartanType type, unsigned rank) {
  switch (type) {
    case CartanType::A: return rank >= 1 && rank <= 4;
    case CartanType::B:
    case CartanType::C: return rank >= 2 && rank <= 4;
    case CartanType::D: return rank == 4;
    case CartanType::G: return rank == 2;
  }
  return false;
}

char type_letter(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
    case CartanType::G: return 'G';
  }
  return '?';
}

}  // namespace

std::string RootSystem::label() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

Rational RootSystem::pairing(const Vec& u, const Vec& v) const {
  if (u.size() != ambient_dim_ || v.size() != ambient_dim_)
    fail(ErrorKind::Input, "pairing: vector dimension does not match the ambient space of " + label());
  return scale_ * dot(u, v);
}

Vec RootSystem::coroot(const Vec& root) const { return (2 / pairing(root, root)) * root; }

Vec RootSystem::ambient(const Weight& w) const {
  if (w.size() != rank_) fail(ErrorKind::Input, "weight has " + std::to_string(w.size()) + " labels, expected " + std::to_string(rank_));
  Vec v(ambient_dim_, Rational(0));
  for (unsigned i = 0; i < rank_; ++i) v = v + w[i] * fundamental_weights_[i];
  return v;
}

Vec RootSystem::labels(const Vec& v) const {
  Vec out(rank_);
  for (unsigned i = 0; i < rank_; ++i) out[i] = pairing(v, simple_coroots_[i]);
  return out;
}

Vec RootSystem::root_coordinates(const Vec& v) const { return cartan_transpose_inverse_ * labels(v); }

std::vector<Vec> RootSystem::positive_root_forms() const {
  std::vector<Vec> forms;
  forms.reserve(positive_roots_.size());
  for (const auto& g : positive_roots_) forms.push_back(labels(g));
  return forms;
}

std::vector<Vec> RootSystem::substitution(const WeylElement& w) const {
  // x_i(wX) = <w^{-1} omega_i, X>; the inverse of an orthogonal matrix is its transpose.
  Matrix inv = w.matrix.transpose();
  std::vector<Vec> images;
  images.reserve(rank_);
  for (unsigned i = 0; i < rank_; ++i) images.push_back(labels(inv * fundamental_weights_[i]));
  return images;
}

RootSystem build_root_system(CartanType type, unsigned rank) {
  if (!supported(type, rank))
    fail(ErrorKind::Config, std::string("unsupported root system ") + type_letter(type) + std::to_string(rank));

  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  const unsigned l = rank;

  switch (type) {
    case CartanType::A:
      rs.ambient_dim_ = l + 1;
      for (unsigned i = 0; i < l; ++i) rs.simple_roots_.push_back(simple_difference(l + 1, i));
      break;
    case CartanType::B:
      rs.ambient_dim_ = l;
      for (unsigned i = 0; i + 1 < l; ++i) rs.simple_roots_.push_back(simple_difference(l, i));
      rs.simple_roots_.push_back(unit(l, l - 1));
      break;
    case CartanType::C:
      rs.ambient_dim_ = l;
      rs.scale_ = Rational(1, 2);
      for (unsigned i = 0; i + 1 < l; ++i) rs.simple_roots_.push_back(simple_difference(l, i));
      rs.simple_roots_.push_back(unit(l, l - 1, 2));
      break;
    case CartanType::D: {
      rs.ambient_dim_ = l;
      for (unsigned i = 0; i + 1 < l; ++i) rs.simple_roots_.push_back(simple_difference(l, i));
      Vec last(l, Rational(0));
      last[l - 2] = 1;
      last[l - 1] = 1;
      rs.simple_roots_.push_back(last);
      break;
    }
    case CartanType::G:
      rs.ambient_dim_ = 3;
      rs.scale_ = Rational(1, 3);
      rs.simple_roots_.push_back(Vec{1, -1, 0});
      rs.simple_roots_.push_back(Vec{-2, 1, 1});
      break;
  }

  for (const auto& a : rs.simple_roots_) rs.simple_coroots_.push_back(rs.coroot(a));

  rs.cartan_ = Matrix(l, l);
  for (unsigned i = 0; i < l; ++i)
    for (unsigned j = 0; j < l; ++j) rs.cartan_(i, j) = rs.pairing(rs.simple_roots_[i], rs.simple_coroots_[j]);
  rs.cartan_transpose_inverse_ = rs.cartan_.transpose().inverse();

  Matrix cinv = rs.cartan_.inverse();
  for (unsigned i = 0; i < l; ++i) {
    Vec w(rs.ambient_dim_, Rational(0));
    for (unsigned j = 0; j < l; ++j) w = w + cinv(i, j) * rs.simple_roots_[j];
    rs.fundamental_weights_.push_back(w);
  }

  std::vector<Matrix> reflections;
  for (const auto& a : rs.simple_roots_) reflections.push_back(reflection_matrix(a));

  // Root closure under simple reflections.
  std::map<Vec, bool> seen;
  std::vector<Vec> frontier = rs.simple_roots_;
  for (const auto& a : frontier) seen[a] = true;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& r : frontier)
      for (const auto& s : reflections) {
        Vec img = s * r;
        if (seen.emplace(img, true).second) next.push_back(img);
      }
    frontier = std::move(next);
  }

  struct Keyed {
    Rational height;
    Vec coords;
    Vec root;
  };
  std::vector<Keyed> positive;
  for (const auto& [r, unused] : seen) {
    Vec n = rs.root_coordinates(r);
    if (std::all_of(n.begin(), n.end(), [](const Rational& q) { return q >= 0; })) {
      Rational h = 0;
      for (const auto& q : n) h += q;
      positive.push_back({h, n, r});
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Keyed& a, const Keyed& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  for (auto& k : positive) rs.positive_roots_.push_back(std::move(k.root));

  rs.rho_ = Vec(rs.ambient_dim_, Rational(0));
  for (const auto& w : rs.fundamental_weights_) rs.rho_ = rs.rho_ + w;

  // Weyl group: breadth-first over lengths, keeping the lexicographically
  // smallest reduced word for each matrix.
  WeylElement id;
  id.matrix = Matrix::identity(rs.ambient_dim_);
  rs.weyl_.push_back(id);
  std::map<Vec, bool> known;
  known[matrix_key(id.matrix)] = true;
  std::vector<WeylElement> level{id};
  while (!level.empty()) {
    std::map<Vec, WeylElement> candidates;
    for (const auto& g : level)
      for (unsigned i = 0; i < l; ++i) {
        Matrix m = g.matrix * reflections[i];
        Vec key = matrix_key(m);
        if (known.count(key)) continue;
        std::vector<unsigned> word = g.reduced_word;
        word.push_back(i);
        auto it = candidates.find(key);
        if (it == candidates.end() || word < it->second.reduced_word) {
          WeylElement e;
          e.reduced_word = std::move(word);
          e.matrix = std::move(m);
          e.length = g.length + 1;
          e.sign = -g.sign;
          candidates[key] = std::move(e);
        }
      }
    std::vector<WeylElement> next;
    for (auto& [key, e] : candidates) {
      known[key] = true;
      next.push_back(std::move(e));
    }
    std::sort(next.begin(), next.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.reduced_word < b.reduced_word; });
    for (const auto& e : next) rs.weyl_.push_back(e);
    level = std::move(next);
  }
  return rs;
}

RootSystem build_root_system(std::string_view label) {
  if (label.size() < 2) fail(ErrorKind::Config, "malformed root system label '" + std::string(label) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  CartanType type;
  switch (letter) {
    case 'A': type = CartanType::A; break;
    case 'B': type = CartanType::B; break;
    case 'C': type = CartanType::C; break;
    case 'D': type = CartanType::D; break;
    case 'G': type = CartanType::G; break;
    default: fail(ErrorKind::Config, "unsupported root system '" + std::string(label) + "'");
  }
  std::string digits(label.substr(1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    fail(ErrorKind::Config, "malformed root system label '" + std::string(label) + "'");
  return build_root_system(type, static_cast<unsigned>(std::stoul(digits)));
}

const std::vector<WeylElement>& enumerate_weyl_group(const RootSystem& rs) { return rs.weyl_group(); }

Vec weyl_act(const WeylElement& w, const Vec& v) {
  if (v.size() != w.matrix.cols()) fail(ErrorKind::Input, "weyl_act: vector dimension mismatch");
  return w.matrix * v;
}

}  // namespace rrloc
