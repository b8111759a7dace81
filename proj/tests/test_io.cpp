#include <doctest.h>

#include "vallab/harness.hpp"
#include "vallab/io.hpp"
#include "vallab/suites.hpp"

using namespace vallab;

namespace {
Scalar r(long p, long q = 1) { return Scalar(Rational(p, q)); }
}  // namespace

TEST_CASE("scalar and vector JSON") {
  const Scalar x{Rational(1, 3), Rational(-2)};
  CHECK(parse_scalar_json(scalar_to_json(x)) == x);
  CHECK(scalar_to_json(r(1, 6)) == "1/6");
  CHECK(parse_scalar_json(Json(7)) == r(7));
  CHECK(parse_scalar_json(Json::parse(R"({"a": "1/2", "b": "3"})")) == Scalar(Rational(1, 2), Rational(3)));
  CHECK_THROWS_AS(parse_scalar_json(Json(1.5)), InputError);
  CHECK_THROWS_AS(parse_scalar_json(Json("x/2")), InputError);
  const Vector v{r(1), x, r(-3, 4)};
  CHECK(parse_vector_json(vector_to_json(v)) == v);
  CHECK(parse_vector_json(Json("1, 2/3, 0")) == Vector{r(1), r(2, 3), r(0)});
}

TEST_CASE("polytope JSON") {
  Generator base(2, 3, ScalarMode::quad);
  for (std::uint64_t i = 0; i < 10; ++i) {
    Generator gen = base.fork(i);
    const Polytope p = random_polytope(gen);
    CHECK(parse_polytope_json(polytope_to_json(p)) == p);
  }
  CHECK(parse_polytope_json(Json::parse(R"({"n": 3, "vertices": []})")).is_empty());
  CHECK_THROWS_AS(parse_polytope_json(Json::parse(R"({"n": 3, "vertices": [[1, 2]]})")), InputError);
  CHECK_THROWS_AS(parse_polytope_json(Json::parse(R"({"vertices": []})")), InputError);
  CHECK_THROWS_AS(parse_polytope_json(Json::parse(R"({"n": 2, "scalar": "real", "vertices": []})")), InputError);
  CHECK_THROWS_AS(parse_polytope_json(Json::parse(R"({"n": 1, "vertices": [[{"a": "0", "b": "1"}]]})")), InputError);
  CHECK(parse_polytope_json(Json::parse(R"({"n": 1, "scalar": "quad", "vertices": [[{"a": "0", "b": "1"}]]})")).dim() == 0);
}

TEST_CASE("zeta and classification JSON") {
  const ZetaSpec z = ZetaSpec::from_eta(UnaryFunction::abs_power(3) + UnaryFunction::polynomial({r(1), r(-2)}));
  const ZetaSpec back = parse_zeta_json(zeta_to_json(z));
  for (long k = -6; k <= 6; ++k) CHECK(back(r(k, 2), Scalar(Rational(1), Rational(1, 3))) == z(r(k, 2), Scalar(Rational(1), Rational(1, 3))));

  const ZetaSpec doc = parse_zeta_json(Json::parse(R"({"eta_a": {"kind":"poly","coeffs":["0","1"]}, "eta_b": {"kind":"zero"}})"));
  CHECK(doc(r(2), Scalar::sqrt2()) == r(0));
  CHECK(doc(r(2), r(3)) == r(6));

  const ZetaSpec tab = parse_zeta_json(Json::parse(R"({"eta": {"kind":"table","knots":[["0","0"],["1","2"]], "coeff": "3"}})"));
  CHECK(tab(r(1, 2), r(1)) == r(3));
  CHECK_THROWS_AS(parse_zeta_json(Json::parse(R"({"eta": {"kind":"nope"}})")), InputError);
  CHECK_THROWS_AS(parse_zeta_json(Json::parse(R"({"eta": {"kind":"oracle"}})")), InputError);
  CHECK_THROWS_AS(parse_zeta_json(Json::parse(R"({"eta": {"kind":"power","p":0.5}})")), InputError);

  const ClassificationData d = mixed_theorem15_data();
  const ClassificationData e = parse_classification_json(classification_to_json(d));
  CHECK(e.c_nm1 == d.c_nm1);
  CHECK(e.c_nm1_tilde == d.c_nm1_tilde);
  CHECK(e.c0 == d.c0);
  CHECK(e.c0_prime == d.c0_prime);
  CHECK(e.c0_tilde == d.c0_tilde);
  CHECK(e.zeta2(r(3, 2), r(2)) == d.zeta2(r(3, 2), r(2)));
  CHECK(zeta_to_json(squared_s_zeta())["kind"] == "non_additive");
}

TEST_CASE("tensor, cauchy and homogeneous JSON") {
  const SymTensor t = m0p(cube(3, r(-1), r(2)), CauchyFunctional::identity(), 2);
  CHECK(parse_tensor_json(tensor_to_json(t)) == t);
  CHECK_THROWS_AS(parse_tensor_json(Json::parse(R"({"p": 1, "n": 2, "coeffs": [{"idx": [5], "v": "1"}]})")), InputError);
  const CauchyFunctional xi = parse_cauchy_json(cauchy_to_json({r(2), r(-1)}));
  CHECK(xi.alpha == r(2));
  CHECK(xi.beta == r(-1));
  CHECK(parse_cauchy_json(Json("3")).is_real_linear());
  const HomogeneousForm f = parse_homogeneous_json(Json::parse(R"({"p": 2, "xi2": "0", "c0": "1"})"));
  CHECK(f.p == 2);
  CHECK(f.xi2.alpha == r(0));
  CHECK(f.c0 == r(1));
  CHECK_THROWS_AS(parse_homogeneous_json(Json::parse(R"({"p": -1})")), InputError);
}

TEST_CASE("measure and report JSON") {
  const Json m = measure_to_json(cone_volume_measure(standard_simplex(3, 3)));
  CHECK(m["kind"] == "cone_volume");
  CHECK(m["atoms"].size() == 1);
  CHECK(m["atoms"][0]["weight"] == "1/6");
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}
