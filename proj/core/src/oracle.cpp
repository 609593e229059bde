#include "rrloc/oracle.hpp"

#include <deque>
#include <set>

#include "rrloc/error.hpp"

namespace rrloc {

Labels to_labels(const Weight& w) {
  Labels out;
  for (const auto& q : w.labels()) {
    if (!is_integral(q)) fail(ErrorKind::Input, "weight (" + w.to_string() + ") is not integral");
    out.push_back(q.get_num().get_si());
  }
  return out;
}

WeightMultiplicities::WeightMultiplicities(const RootSystem& rs, const DominantWeight& lam)
    : highest_(to_labels(lam.weight())),
      cartan_(rs.cartan_matrix()),
      gram_(rs.rank(), rs.rank()),
      cartan_transpose_inverse_(rs.cartan_matrix().transpose().inverse()) {
  if (highest_.size() != rs.rank()) fail(ErrorKind::Input, "weight does not match the rank of " + rs.label());
  const auto& omega = rs.fundamental_weights();
  for (unsigned i = 0; i < rs.rank(); ++i)
    for (unsigned j = 0; j < rs.rank(); ++j) gram_(i, j) = rs.pairing(omega[i], omega[j]);
  for (const auto& f : rs.positive_root_forms()) {
    Labels l;
    for (const auto& q : f) l.push_back(q.get_num().get_si());
    positive_roots_.push_back(l);
  }
}

Rational WeightMultiplicities::form(const Labels& a, const Labels& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (a[i] != 0 && b[j] != 0) s += gram_(i, j) * a[i] * b[j];
  return s;
}

Labels WeightMultiplicities::dominant_conjugate(Labels mu) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mu[i] < 0) {
        const long c = mu[i];
        for (std::size_t j = 0; j < mu.size(); ++j) mu[j] -= c * cartan_(i, j).get_num().get_si();
        changed = true;
      }
  }
  return mu;
}

bool WeightMultiplicities::below_highest(const Labels& dominant) const {
  Vec diff(dominant.size());
  for (std::size_t i = 0; i < dominant.size(); ++i) diff[i] = highest_[i] - dominant[i];
  Vec n = cartan_transpose_inverse_ * diff;
  for (const auto& q : n)
    if (!is_integral(q) || q < 0) return false;
  return true;
}

Integer WeightMultiplicities::multiplicity(const Labels& mu) {
  const Labels dom = dominant_conjugate(mu);
  if (!below_highest(dom)) return 0;
  if (dom == highest_) return 1;
  if (auto it = dominant_mults_.find(dom); it != dominant_mults_.end()) return it->second;

  Labels lam_rho = highest_, mu_rho = dom;
  for (auto& x : lam_rho) ++x;
  for (auto& x : mu_rho) ++x;
  const Rational den = form(lam_rho, lam_rho) - form(mu_rho, mu_rho);
  Rational num = 0;
  for (const auto& alpha : positive_roots_) {
    Labels shifted = dom;
    while (true) {
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += alpha[i];
      Integer m = multiplicity(shifted);
      if (m == 0) break;
      num += Rational(m) * form(shifted, alpha);
    }
  }
  Rational value = 2 * num / den;
  if (!is_integral(value) || value < 0) fail(ErrorKind::InternalInconsistency, "Freudenthal recursion gave a non-integer");
  Integer result = value.get_num();
  dominant_mults_.emplace(dom, result);
  return result;
}

Character WeightMultiplicities::character() {
  Character ch;
  std::set<Labels> seen{highest_};
  std::deque<Labels> queue{highest_};
  while (!queue.empty()) {
    Labels mu = queue.front();
    queue.pop_front();
    ch[mu] = multiplicity(mu);
    for (std::size_t i = 0; i < mu.size(); ++i) {
      Labels next = mu;
      for (std::size_t j = 0; j < mu.size(); ++j) next[j] -= cartan_(i, j).get_num().get_si();
      if (seen.count(next) || multiplicity(next) == 0) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return ch;
}

Integer WeightMultiplicities::dimension() {
  Integer d = 0;
  for (const auto& [mu, m] : character()) d += m;
  return d;
}

Character tensor_character(const RootSystem& rs, const std::vector<DominantWeight>& factors) {
  Character total;
  total[Labels(rs.rank(), 0)] = 1;
  for (const auto& f : factors) {
    Character ch = WeightMultiplicities(rs, f).character();
    Character next;
    for (const auto& [a, ma] : total)
      for (const auto& [b, mb] : ch) {
        Labels s = a;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        next[s] += ma * mb;
      }
    total = std::move(next);
  }
  return total;
}

Integer tensor_multiplicity_oracle(const RootSystem& rs, const std::vector<DominantWeight>& factors,
                                   const DominantWeight& target) {
  const Labels nu = to_labels(target.weight());
  if (nu.size() != rs.rank()) fail(ErrorKind::Input, "target does not match the rank of " + rs.label());
  const Character total = tensor_character(rs, factors);
  // c_nu = sum_w sgn(w) m(nu + rho - w rho)
  Integer c = 0;
  for (const auto& w : rs.weyl_group()) {
    const Vec shift = rs.labels(rs.rho() - w.matrix * rs.rho());
    Labels key = nu;
    for (std::size_t i = 0; i < key.size(); ++i) key[i] += shift[i].get_num().get_si();
    auto it = total.find(key);
    if (it != total.end()) c += w.sign * it->second;
  }
  return c;
}

}  // namespace rrloc
