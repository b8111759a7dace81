#include "vallab/valuations.hpp"

#include <cmath>

namespace vallab {

namespace {

void check_x(const Polytope& p, const Vector& x, OriginMode mode, const char* what) {
  if (x.size() != p.ambient_dim()) throw DomainError(std::string(what) + ": dimension mismatch");
  if (mode == OriginMode::strict && is_zero(x)) throw DomainError(std::string(what) + ": x must be nonzero");
}

int parity(int d) { return d % 2 == 0 ? 1 : -1; }

Scalar local_terms(const Polytope& p, const Scalar& c0, const Scalar& c0_prime) {
  Scalar v(0);
  if (!c0.is_zero()) v += c0 * Scalar(euler(p));
  if (!c0_prime.is_zero()) v += c0_prime * Scalar(euler_local(p));
  return v;
}

Scalar projection_term(const Polytope& p, const Scalar& c, const Vector& x) {
  if (c.is_zero() || is_zero(x)) return Scalar(0);
  return c * projection_mixed(p, x);
}

bool integral(double p) { return p >= 0 && std::floor(p) == p && p < 1e6; }

}  // namespace

Scalar pi_zeta(const Polytope& p, const ZetaSpec& zeta, const Vector& x, OriginMode mode) {
  check_x(p, x, mode, "pi_zeta");
  Scalar total(0);
  if (zeta.is_zero()) return total;
  for (const auto& f : p.facets()) {
    if (f.support.is_zero()) continue;
    total += zeta(dot(x, f.normal) / f.support, f.cone_volume);
  }
  return total;
}

double pi_zeta_approx(const Polytope& p, const ZetaSpec& zeta, const Vector& x, OriginMode mode) {
  check_x(p, x, mode, "pi_zeta");
  double total = 0;
  for (const auto& f : p.facets()) {
    if (f.support.is_zero()) continue;
    total += zeta.approx((dot(x, f.normal) / f.support).to_double(), f.cone_volume);
  }
  return total;
}

Scalar pi_zeta_tilde(const Polytope& p, const ZetaSpec& zeta, const Vector& x, OriginMode mode) {
  return pi_zeta(hull_with_origin(p), zeta, x, mode);
}

int euler_local(const Polytope& p) {
  if (p.is_empty() || !contains_origin_relint(p)) return 0;
  return parity(p.dim());
}

int euler_hit(const Polytope& p) { return contains_origin(p) ? 1 : 0; }

Scalar z_theorem11(const Polytope& p, const ClassificationData& data, const Vector& x) {
  check_x(p, x, OriginMode::strict, "z_theorem11");
  if (!contains_origin(p)) throw DomainError("z_theorem11: the polytope must contain the origin");
  return pi_zeta(p, data.zeta1, x) + projection_term(p, data.c_nm1, x) + local_terms(p, data.c0, data.c0_prime);
}

Scalar z_theorem15(const Polytope& p, const ClassificationData& data, const Vector& x) {
  check_x(p, x, OriginMode::strict, "z_theorem15");
  Scalar v = pi_zeta(p, data.zeta1, x) + projection_term(p, data.c_nm1, x) + local_terms(p, data.c0, data.c0_prime);
  if (!data.zeta2.is_zero() || !data.c_nm1_tilde.is_zero()) {
    const Polytope q = hull_with_origin(p);
    v += pi_zeta(q, data.zeta2, x) + projection_term(q, data.c_nm1_tilde, x);
  }
  if (!data.c0_tilde.is_zero()) v += data.c0_tilde * Scalar(euler_hit(p));
  return v;
}

Scalar z_homogeneous(const Polytope& p, const HomogeneousForm& form, const Vector& x) {
  if (!(form.p >= 0)) throw DomainError("z_homogeneous: p must be >= 0");
  if (!integral(form.p)) throw DomainError("z_homogeneous: non-integer p has no exact value; use the approximate form");
  check_x(p, x, OriginMode::strict, "z_homogeneous");
  const auto k = static_cast<unsigned>(form.p);
  if (k == 0) return form.xi3(p.volume()) + local_terms(p, form.c0, form.c0_prime);
  Scalar total(0);
  for (const auto& f : p.facets()) {
    if (f.support.is_zero()) continue;
    const Scalar t = dot(x, f.normal) / f.support;
    const int sg = t.sign();
    if (sg > 0) total += pow(t, k) * form.xi1(f.cone_volume);
    if (sg < 0) total += pow(-t, k) * form.xi2(f.cone_volume);
  }
  if (k == 1) total += projection_term(p, form.c_nm1, x);
  return total;
}

double z_homogeneous_approx(const Polytope& p, const HomogeneousForm& form, const Vector& x) {
  if (!(form.p >= 0) || !std::isfinite(form.p)) throw DomainError("z_homogeneous: p must be a finite number >= 0");
  if (integral(form.p)) return z_homogeneous(p, form, x).to_double();
  check_x(p, x, OriginMode::strict, "z_homogeneous");
  double total = 0;
  for (const auto& f : p.facets()) {
    if (f.support.is_zero()) continue;
    const double t = (dot(x, f.normal) / f.support).to_double();
    if (t > 0) total += std::pow(t, form.p) * form.xi1(f.cone_volume).to_double();
    if (t < 0) total += std::pow(-t, form.p) * form.xi2(f.cone_volume).to_double();
  }
  return total;
}

}  // namespace vallab
