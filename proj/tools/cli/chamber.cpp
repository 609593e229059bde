#include "chamber.hpp"

#include <algorithm>

#include "rrloc/error.hpp"

namespace rrloc::cli {

namespace {

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
};

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Area of the convex hull (monotone chain).
Rational hull_area(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  Rational twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    twice += a.x * b.y - a.y * b.x;
  }
  return abs(twice) / 2;
}

}  // namespace

Rational chamber_volume(const std::vector<Vec>& weights, const Vec& p) {
  const std::size_t n = weights.size();
  if (n < 2 || n > 4) fail(ErrorKind::Input, "chamber volume supports two to four weights");
  if (p.size() != 2) fail(ErrorKind::Input, "chamber volume is two-dimensional");

  // Basis pair sigma; the remaining coordinates t_free parametrize the fiber
  // with t_sigma = B_sigma^{-1}(p - B_free t_free).
  std::size_t a = 0, b = 1;
  bool found = false;
  for (a = 0; a < n && !found; ++a)
    for (b = a + 1; b < n && !found; ++b)
      if (Matrix::from_columns({weights[a], weights[b]}).determinant() != 0) found = true;
  if (!found) fail(ErrorKind::Input, "weights do not span the plane");
  --a;
  --b;
  const Matrix basis = Matrix::from_columns({weights[a], weights[b]});
  const Matrix inv = basis.inverse();
  const Rational jac = 1 / abs(basis.determinant());
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (i != a && i != b) free.push_back(i);

  // Constraints c0 + c . t_free >= 0: the two basic coordinates and t_free >= 0.
  struct Constraint {
    Rational c0;
    Vec c;
  };
  std::vector<Constraint> cons;
  const Vec base = inv * p;
  for (std::size_t r = 0; r < 2; ++r) {
    Constraint k{base[r], Vec(free.size())};
    for (std::size_t j = 0; j < free.size(); ++j) k.c[j] = -(inv * weights[free[j]])[r];
    cons.push_back(k);
  }
  for (std::size_t j = 0; j < free.size(); ++j) {
    Constraint k{0, Vec(free.size(), Rational(0))};
    k.c[j] = 1;
    cons.push_back(k);
  }
  auto feasible = [&](const Vec& t) {
    return std::all_of(cons.begin(), cons.end(), [&](const Constraint& k) { return k.c0 + dot(k.c, t) >= 0; });
  };

  switch (free.size()) {
    case 0:
      return feasible(Vec{}) ? jac : Rational(0);
    case 1: {
      bool bounded_above = false;
      Rational lo = 0, hi = 0;
      for (const auto& k : cons) {
        if (k.c[0] == 0) {
          if (k.c0 < 0) return 0;
          continue;
        }
        Rational bound = -k.c0 / k.c[0];
        if (k.c[0] > 0) {
          lo = std::max(lo, bound);
        } else if (!bounded_above || bound < hi) {
          hi = bound;
          bounded_above = true;
        }
      }
      if (!bounded_above) fail(ErrorKind::Input, "unbounded fiber; weights are not in a half-plane");
      return hi > lo ? jac * (hi - lo) : Rational(0);
    }
    default: {
      std::vector<Point> vertices;
      for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
          Matrix m = Matrix::from_rows({cons[i].c, cons[j].c});
          if (m.determinant() == 0) continue;
          Vec t = m.inverse() * Vec{-cons[i].c0, -cons[j].c0};
          if (feasible(t)) vertices.push_back({t[0], t[1]});
        }
      return jac * hull_area(vertices);
    }
  }
}

}  // namespace rrloc::cli
