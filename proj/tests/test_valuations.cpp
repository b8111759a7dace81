#include <doctest.h>

#include "oracle.hpp"
#include "vallab/harness.hpp"
#include "vallab/suites.hpp"
#include "vallab/valuations.hpp"

using namespace vallab;

namespace {

Vector v3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
Scalar r(long p, long q = 1) { return Scalar(Rational(p, q)); }
UnaryFunction poly(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.push_back(Scalar(v));
  return UnaryFunction::polynomial(s);
}

}  // namespace

TEST_CASE("unary functions") {
  CHECK(poly({1, 0, 2})(r(3)) == r(19));
  CHECK(UnaryFunction::abs_power(3)(r(-2)) == r(8));
  CHECK(UnaryFunction::plus_power(2)(r(-2)) == r(0));
  CHECK(UnaryFunction::plus_power(2)(r(3)) == r(9));
  CHECK(UnaryFunction::minus_power(1)(r(-2)) == r(2));
  CHECK(UnaryFunction::minus_power(1)(r(2)) == r(0));
  const auto tab = UnaryFunction::table({{r(0), r(0)}, {r(2), r(4)}});
  CHECK(tab(r(1)) == r(2));
  CHECK(tab(r(5)) == r(4));
  CHECK(tab(r(-1)) == r(0));
  CHECK(UnaryFunction::abs_power(0.5).approx(4.0) == doctest::Approx(2.0));
  CHECK_FALSE(UnaryFunction::abs_power(0.5).exact());
  CHECK_THROWS_AS(UnaryFunction::abs_power(0.5)(r(4)), DomainError);
}

TEST_CASE("zeta is additive and odd in s") {
  const ZetaSpec z(poly({1, 2}), poly({0, 0, 3}));
  const Scalar s1{Rational(1, 3), Rational(2)};
  const Scalar s2{Rational(-5), Rational(1, 7)};
  for (long k = -4; k <= 4; ++k) {
    const Scalar t = r(k, 3);
    CHECK(z(t, s1 + s2) == z(t, s1) + z(t, s2));
    CHECK(z(t, -s1) == -z(t, s1));
    CHECK(z(t, Scalar(0)) == Scalar(0));
  }
  // From eta: R-linear in s.
  const ZetaSpec e = ZetaSpec::from_eta(poly({0, 1}));
  CHECK(e(r(2), Scalar::sqrt2()) == r(2) * Scalar::sqrt2());
  // t * a is not: zeta(1, sqrt2) = 0 but sqrt2 zeta(1, 1) = sqrt2.
  const ZetaSpec a = rational_part_zeta();
  CHECK(a(r(1), Scalar::sqrt2()) != Scalar::sqrt2() * a(r(1), r(1)));
}

TEST_CASE("pi_zeta closed forms") {
  const ZetaSpec lin = linear_zeta();
  CHECK(pi_zeta(standard_simplex(3, 3), lin, v3(0, 0, 1)) == r(1, 6));
  CHECK(pi_zeta(cube(3), lin, v3(0, 0, 1)) == r(1, 3));
  CHECK(pi_zeta(hull({}, 3), lin, v3(0, 0, 1)) == r(0));
  CHECK(pi_zeta(standard_simplex(3, 2), lin, v3(0, 0, 1)) == r(0));
  CHECK_THROWS_AS(pi_zeta(standard_simplex(3, 3), lin, v3(0, 0, 0)), DomainError);
  CHECK(pi_zeta(standard_simplex(3, 3), lin, v3(0, 0, 0), OriginMode::lenient) == r(0));
  CHECK_THROWS_AS(pi_zeta(standard_simplex(3, 3), lin, Vector{r(1)}), DomainError);
  // sT^n at t e_n for n = 3, 4.
  for (std::size_t n : {3, 4})
    for (const Scalar& s : {r(1), r(2), r(3, 4)})
      for (const Scalar& t : {r(1), r(-5, 2), r(1, 3)}) {
        const ZetaSpec z = abs_power_zeta(2);
        Scalar vol = pow(s, static_cast<unsigned>(n));
        for (std::size_t k = 2; k <= n; ++k) vol /= Scalar(static_cast<long>(k));
        CHECK(pi_zeta(standard_simplex(n, n, s), z, t * unit_vector(n, n - 1)) == z(t / s, vol));
      }
}

TEST_CASE("pi_zeta against the facet oracle") {
  Generator base(17, 3);
  const ZetaSpec z(poly({0, 1, 0, -2}), poly({1}));
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.degenerate_rate = 0});
    const Vector x = gen.nonzero_vector();
    CHECK(pi_zeta(p, z, x) == oracle::pi_zeta3(p.vertices(), z, x));
    CHECK(pi_zeta_approx(p, z, x) == doctest::Approx(pi_zeta(p, z, x).to_double()));
  }
}

TEST_CASE("pi_zeta_tilde") {
  const ZetaSpec lin = linear_zeta();
  const Polytope tri = hull({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, 3);
  CHECK(pi_zeta_tilde(tri, lin, v3(1, 2, 3)) == pi_zeta(standard_simplex(3, 3), lin, v3(1, 2, 3)));
  const Polytope c = cube(3);
  CHECK(pi_zeta_tilde(c, lin, v3(1, 2, 3)) == pi_zeta(c, lin, v3(1, 2, 3)));
}

TEST_CASE("euler terms") {
  CHECK(euler_local(hull({v3(0, 0, 0)}, 3)) == 1);
  CHECK(euler_local(hull({v3(-1, 0, 0), v3(1, 0, 0)}, 3)) == -1);
  CHECK(euler_local(standard_simplex(3, 3)) == 0);
  CHECK(euler_local(cube(3, r(-1), r(1))) == -1);
  CHECK(euler_local(hull({}, 3)) == 0);
  CHECK(euler_hit(standard_simplex(3, 3)) == 1);
  CHECK(euler_hit(translate(standard_simplex(3, 3), v3(1, 0, 0))) == 0);
}

TEST_CASE("origin-domain combination") {
  ClassificationData euler_only;
  euler_only.c0 = r(1);
  CHECK(z_theorem11(standard_simplex(3, 3), euler_only, v3(1, 2, 3)) == r(1));
  CHECK(z_theorem11(cube(3, r(-1), r(1)), euler_only, v3(1, 0, 0)) == r(1));

  ClassificationData lin;
  lin.zeta1 = linear_zeta();
  CHECK(z_theorem11(standard_simplex(3, 3), lin, v3(0, 0, 1)) == r(1, 6));

  ClassificationData proj;
  proj.c_nm1 = r(1);
  CHECK(z_theorem11(standard_simplex(3, 2), proj, v3(0, 0, 2)) == r(2, 3));

  ClassificationData local;
  local.c0_prime = r(1);
  CHECK(z_theorem11(hull({v3(0, 0, 0)}, 3), local, v3(0, 0, 1)) == r(1));
  CHECK(z_theorem11(cube(3, r(-1), r(1)), local, v3(0, 0, 1)) == r(-1));

  CHECK_THROWS_AS(z_theorem11(translate(standard_simplex(3, 3), v3(1, 0, 0)), lin, v3(0, 0, 1)), DomainError);
  CHECK_THROWS_AS(z_theorem11(standard_simplex(3, 3), lin, v3(0, 0, 0)), DomainError);
}

TEST_CASE("general-domain combination") {
  ClassificationData d = mixed_theorem15_data();
  d.zeta2 = ZetaSpec();
  d.c_nm1_tilde = r(0);
  d.c0_tilde = r(0);
  Generator base(23, 3);
  for (std::uint64_t trial = 0; trial < 10; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.contain_origin = true});
    const Vector x = gen.nonzero_vector();
    CHECK(z_theorem15(p, d, x) == z_theorem11(p, d, x));
  }

  const Polytope shifted = translate(standard_simplex(3, 3), v3(1, 0, 0));
  ClassificationData second;
  second.zeta2 = linear_zeta();
  CHECK(z_theorem15(shifted, second, v3(0, 0, 1)) == pi_zeta(hull_with_origin(shifted), linear_zeta(), v3(0, 0, 1)));

  ClassificationData hit;
  hit.c0_tilde = r(1);
  CHECK(z_theorem15(shifted, hit, v3(0, 0, 1)) == r(0));
  CHECK(z_theorem15(standard_simplex(3, 3), hit, v3(0, 0, 1)) == r(1));
}

TEST_CASE("homogeneous forms") {
  HomogeneousForm f0;
  f0.p = 0;
  CHECK(z_homogeneous(standard_simplex(3, 3), f0, v3(0, 0, 1)) == r(1, 6));

  HomogeneousForm f2;
  f2.p = 2;
  CHECK(z_homogeneous(standard_simplex(3, 3), f2, v3(0, 0, 1)) == r(1, 6));
  // t_-^2 picks up negative ratios only.
  CHECK(z_homogeneous(standard_simplex(3, 3), f2, v3(0, 0, -2)) == r(4, 6));
  f2.xi2 = CauchyFunctional::zero();
  CHECK(z_homogeneous(standard_simplex(3, 3), f2, v3(0, 0, -2)) == r(0));

  HomogeneousForm f1;
  f1.p = 1;
  f1.c_nm1 = r(3);
  CHECK(z_homogeneous(standard_simplex(3, 3), f1, v3(0, 0, 1)) == r(1, 6) + r(3) * r(1, 3));

  HomogeneousForm half;
  half.p = 0.5;
  CHECK_THROWS_AS(z_homogeneous(standard_simplex(3, 3), half, v3(0, 0, 4)), DomainError);
  CHECK(z_homogeneous_approx(standard_simplex(3, 3), half, v3(0, 0, 4)) == doctest::Approx(2.0 / 6.0));
}
