#pragma once

#include "vallab/measures.hpp"
#include "vallab/polytope.hpp"
#include "vallab/zeta.hpp"

namespace vallab {

/// How x = o is treated. Strict rejects it (the functions live on R^n \ {o});
/// lenient evaluates every term at t = 0.
enum class OriginMode { strict, lenient };

/**
 * Pi_zeta(P)(x) = sum over facets u with h_P(u) != 0 of
 *   zeta(x.u / h_P(u), V_P(u)).
 *
 * The ratio and V_P(u) do not depend on the scale of u, so the stored
 * canonical normals are used as is. Empty and lower-dimensional P with no
 * such facets give 0. Throws DomainError on dimension mismatch or, in strict
 * mode, x = o; throws DomainError when zeta is not exactly evaluable.
 */
Scalar pi_zeta(const Polytope& p, const ZetaSpec& zeta, const Vector& x,
               OriginMode mode = OriginMode::strict);
/// Same sum in double precision; accepts zeta with non-integer exponents.
double pi_zeta_approx(const Polytope& p, const ZetaSpec& zeta, const Vector& x,
                      OriginMode mode = OriginMode::strict);
/// Pi_zeta([P, o])(x).
Scalar pi_zeta_tilde(const Polytope& p, const ZetaSpec& zeta, const Vector& x,
                     OriginMode mode = OriginMode::strict);

/// (-1)^dim P if o is in relint P, else 0 (0 for empty P).
int euler_local(const Polytope& p);
/// 1 if o is in P, else 0.
int euler_hit(const Polytope& p);

/**
 * Parameters of the two classified families.
 *
 * Origin-containing polytopes use zeta1, c_nm1, c0, c0_prime. The general
 * family adds zeta2 (applied to [o, P]), c_nm1_tilde and c0_tilde.
 */
struct ClassificationData {
  ZetaSpec zeta1;
  ZetaSpec zeta2;
  Scalar c_nm1{0};
  Scalar c_nm1_tilde{0};
  Scalar c0{0};
  Scalar c0_prime{0};
  Scalar c0_tilde{0};
};

/// Pi_zeta1(P)(x) + c_nm1 V_1(P,[-x,x]) + c0 V_0(P) + c0' (-1)^dim P V_0(o in relint P).
/// Requires o in P and x != o (DomainError otherwise).
Scalar z_theorem11(const Polytope& p, const ClassificationData& data, const Vector& x);

/// The seven-term sum over general polytopes. Requires x != o.
Scalar z_theorem15(const Polytope& p, const ClassificationData& data, const Vector& x);

/**
 * A p-homogeneous valuation on origin-containing polytopes:
 *
 *   p not in {0,1}: sum over N_o of t_+^p xi1(V_P(u)) + t_-^p xi2(V_P(u))
 *   p = 1:          the same plus c_nm1 V_1(P,[-x,x])
 *   p = 0:          xi3(V_n(P)) + c0 V_0(P) + c0' (-1)^dim P V_0(o in relint P)
 *
 * with t = x.u / h_P(u). Unused parameters are ignored for each case.
 */
struct HomogeneousForm {
  double p = 1;
  CauchyFunctional xi1 = CauchyFunctional::identity();
  CauchyFunctional xi2 = CauchyFunctional::identity();
  CauchyFunctional xi3 = CauchyFunctional::identity();
  Scalar c0{0};
  Scalar c0_prime{0};
  Scalar c_nm1{0};
};

/// Exact evaluation; p must be a nonnegative integer (DomainError otherwise,
/// and for x = o).
Scalar z_homogeneous(const Polytope& p, const HomogeneousForm& form, const Vector& x);
/// Double evaluation for any real p >= 0.
double z_homogeneous_approx(const Polytope& p, const HomogeneousForm& form, const Vector& x);

}  // namespace vallab
