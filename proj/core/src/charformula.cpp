#include "rrloc/charformula.hpp"

#include "rrloc/error.hpp"

namespace rrloc {

namespace {

void check_rank(const RootSystem& rs, const Weight& w) {
  if (w.size() != rs.rank())
    fail(ErrorKind::Input, "weight (" + w.to_string() + ") does not match rank of " + rs.label());
}

}  // namespace

Integer weyl_dim(const RootSystem& rs, const DominantWeight& lam) {
  check_rank(rs, lam);
  const Vec shifted = rs.ambient(lam) + rs.rho();
  Rational ratio = 1;
  for (const auto& a : rs.positive_roots()) ratio *= rs.pairing(shifted, a) / rs.pairing(rs.rho(), a);
  if (!is_integral(ratio)) fail(ErrorKind::InternalInconsistency, "Weyl dimension is not an integer");
  return ratio.get_num();
}

Rational orbit_volume(const RootSystem& rs, const Weight& lam) {
  check_rank(rs, lam);
  const Vec v = rs.ambient(lam);
  Rational ratio = 1;
  for (const auto& a : rs.positive_roots()) {
    Rational p = rs.pairing(v, a);
    if (p == 0) fail(ErrorKind::DegenerateOrbit, "weight (" + lam.to_string() + ") lies on a Weyl wall");
    if (p < 0) fail(ErrorKind::Input, "weight (" + lam.to_string() + ") is not dominant");
    ratio *= p / rs.pairing(rs.rho(), a);
  }
  return ratio;
}

TruncatedSeries character_series(const RootSystem& rs, const DominantWeight& lam, unsigned trunc_degree) {
  check_rank(rs, lam);
  const unsigned m = static_cast<unsigned>(rs.num_positive_roots());
  const unsigned top = trunc_degree + m;
  const Vec shifted = rs.ambient(lam) + rs.rho();

  TruncatedSeries numerator(rs.rank(), top);
  for (const auto& w : rs.weyl_group()) {
    TruncatedSeries e = exp_linear(rs.labels(w.matrix * shifted), top);
    numerator = w.sign > 0 ? numerator + e : numerator - e;
  }

  TruncatedSeries quotient(rs.rank(), trunc_degree);
  try {
    quotient = ts_divide_exact(numerator, positive_root_product(rs));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ExactDivision) fail(ErrorKind::InternalInconsistency, e.what());
    throw;
  }

  TruncatedSeries units = TruncatedSeries::constant(rs.rank(), 1, trunc_degree);
  for (const auto& f : rs.positive_root_forms()) units *= sinh_ratio(f, trunc_degree);
  return quotient * ts_invert(units);
}

}  // namespace rrloc
