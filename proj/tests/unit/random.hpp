#pragma once

#include <random>

#include "rrloc/polynomial.hpp"

namespace rrloc::test {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t vars, unsigned max_degree, int terms = 5) {
  std::uniform_int_distribution<int> exp(0, static_cast<int>(max_degree));
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponents e;
    unsigned budget = max_degree;
    for (std::size_t i = 0; i < vars; ++i) {
      const auto a = static_cast<unsigned>(exp(rng)) % (budget + 1);
      e[i] = static_cast<std::uint16_t>(a);
      budget -= a;
    }
    p.add_term(e, random_rational(rng));
  }
  return p;
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t n, long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(d(rng));
  return v;
}

}  // namespace rrloc::test
