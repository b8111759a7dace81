#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "vallab/harness.hpp"
#include "vallab/polytope.hpp"

using namespace vallab;

namespace {

Vector v3(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
Vector half3(long a, long b, long c) { return {Scalar(Rational(a, 2)), Scalar(Rational(b, 2)), Scalar(Rational(c, 2))}; }

const FacetData* find_facet(const Polytope& p, const Vector& normal) {
  for (const auto& f : p.facets())
    if (is_zero(f.normal - normal)) return &f;
  return nullptr;
}

}  // namespace

TEST_CASE("hull of the standard tetrahedron") {
  const Polytope t = hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, 3);
  CHECK(t.dim() == 3);
  CHECK(t.vertices().size() == 4);
  REQUIRE(t.facets().size() == 4);
  const FacetData* top = find_facet(t, v3(1, 1, 1));
  REQUIRE(top != nullptr);
  CHECK(top->support == Scalar(1));
  CHECK(top->cone_volume == Scalar(Rational(1, 6)));
  CHECK(t.volume() == Scalar(Rational(1, 6)));
  CHECK(t == standard_simplex(3, 3));
}

TEST_CASE("hull drops redundant points") {
  const Polytope t = hull({v3(0, 0, 0), v3(2, 0, 0), v3(0, 2, 0), v3(0, 0, 2), v3(1, 0, 0), half3(1, 1, 1), v3(1, 1, 0)}, 3);
  CHECK(t.vertices().size() == 4);
  CHECK(t.volume() == Scalar(Rational(4, 3)));
}

TEST_CASE("hyperplanar polytopes have two opposite facets") {
  const Polytope tri = hull({v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0)}, 3);
  CHECK(tri.dim() == 2);
  REQUIRE(tri.facets().size() == 2);
  for (const auto& f : tri.facets()) {
    CHECK(f.support == Scalar(0));
    CHECK(f.normalized_area * norm2(f.normal) == Scalar(Rational(1, 2)) * norm2(f.normal));
  }
  CHECK(is_zero(tri.facets()[0].normal + tri.facets()[1].normal));
  CHECK(hull({v3(0, 0, 0), v3(1, 2, 3)}, 3).facets().empty());
}

TEST_CASE("empty and point polytopes") {
  const Polytope e = hull({}, 3);
  CHECK(e.is_empty());
  CHECK(e.dim() == -1);
  CHECK(e.facets().empty());
  CHECK(euler(e) == 0);
  const Polytope o = hull({v3(0, 0, 0)}, 3);
  CHECK(euler(o) == 1);
  CHECK(o.dim() == 0);
  CHECK(hull({v3(0, 0, 0), v3(1, 0, 0)}, 3).dim() == 1);
  CHECK_THROWS_AS(hull({v3(0, 0, 0), Vector{Scalar(1)}}, 3), DomainError);
}

TEST_CASE("support function") {
  const Polytope t = standard_simplex(3, 3);
  CHECK(support(t, v3(1, 1, 1)) == Scalar(1));
  CHECK(support(t, v3(-1, 0, 0)) == Scalar(0));
}

TEST_CASE("cutting the tetrahedron by x1 = x2") {
  const Polytope t = standard_simplex(3, 3);
  const CutPieces pieces = cut(t, Hyperplane{v3(1, -1, 0), Scalar(0)});
  std::vector<Vector> expected{v3(0, 0, 0), v3(0, 1, 0), v3(0, 0, 1), half3(1, 1, 0)};
  std::sort(expected.begin(), expected.end());
  CHECK(pieces.minus.vertices() == expected);
  CHECK(pieces.minus.volume() == Scalar(Rational(1, 12)));
  CHECK(pieces.plus.volume() == Scalar(Rational(1, 12)));
  CHECK(pieces.slice.dim() == 2);
  // The minus piece is the image of T^3 under e1 -> (e1 + e2)/2.
  const LinearMap phi(Matrix{{Scalar(Rational(1, 2)), Scalar(0), Scalar(0)},
                             {Scalar(Rational(1, 2)), Scalar(1), Scalar(0)},
                             {Scalar(0), Scalar(0), Scalar(1)}});
  CHECK(apply_linear(t, phi) == pieces.minus);
}

TEST_CASE("cut by a disjoint hyperplane") {
  const Polytope t = standard_simplex(3, 3);
  const CutPieces pieces = cut(t, Hyperplane{v3(1, 0, 0), Scalar(5)});
  CHECK(pieces.minus == t);
  CHECK(pieces.plus.is_empty());
  CHECK(pieces.slice.is_empty());
}

TEST_CASE("linear images") {
  const Polytope t = standard_simplex(3, 3);
  const Polytope sheared = apply_linear(t, LinearMap::shear(3, 1, 0, Scalar(1)));
  CHECK(sheared.volume() == Scalar(Rational(1, 6)));
  CHECK(apply_linear(t, LinearMap::identity(3)) == t);
  CHECK(scale(t, Scalar(2)).volume() == Scalar(Rational(8, 6)));
  CHECK(translate(t, v3(1, 0, 0)).volume() == t.volume());
}

TEST_CASE("hull with origin") {
  const Polytope tri = hull({v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}, 3);
  CHECK(hull_with_origin(tri) == standard_simplex(3, 3));
  const Polytope c = cube(3, Scalar(-1), Scalar(1));
  CHECK(hull_with_origin(c) == c);
}

TEST_CASE("origin membership") {
  CHECK(contains_origin_relint(hull({v3(-1, 0, 0), v3(1, 0, 0)}, 3)));
  CHECK_FALSE(contains_origin_relint(standard_simplex(3, 3)));
  CHECK(contains_origin(standard_simplex(3, 3)));
  CHECK(contains_origin_relint(hull({v3(0, 0, 0)}, 3)));
  CHECK_FALSE(contains_origin(translate(standard_simplex(3, 3), v3(1, 0, 0))));
}

TEST_CASE("hausdorff distance") {
  const Polytope t = standard_simplex(3, 3);
  CHECK(hausdorff_distance_approx(t, t) == doctest::Approx(0));
  CHECK(std::abs(hausdorff_distance_approx(t, scale(t, Scalar(2))) - 1.0) <= 0.1);
  const Polytope point = hull({v3(1, 2, 3)}, 3);
  CHECK(hausdorff_distance_approx(point, translate(point, v3(1, 0, 0))) == doctest::Approx(1));
}

TEST_CASE("quad coordinates") {
  const Scalar r2 = Scalar::sqrt2();
  const Polytope t = hull({v3(0, 0, 0), Vector{r2, Scalar(0), Scalar(0)}, v3(0, 1, 0), v3(0, 0, 1)}, 3);
  CHECK(t.volume() == r2 / Scalar(6));
  Scalar total(0);
  for (const auto& f : t.facets()) total += f.cone_volume;
  CHECK(total == t.volume());
}

TEST_CASE("random polytopes against the cross-product oracle") {
  Generator base(11, 3);
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.degenerate_rate = 0});
    REQUIRE(p.full_dimensional());
    const auto ref = oracle::facets3(p.vertices());
    CHECK(p.facets().size() == ref.size());
    Scalar cone_sum(0);
    for (const auto& f : p.facets()) {
      cone_sum += f.cone_volume;
      // Support and normal are consistent with every vertex.
      for (const auto& v : p.vertices()) CHECK(dot(f.normal, v) <= f.support);
      CHECK(f.cone_volume == f.support * f.normalized_area / Scalar(3));
      auto match = std::find_if(ref.begin(), ref.end(), [&](const oracle::Facet& g) {
        return dot(f.normal, g.normal).sign() > 0 &&
               dot(f.normal, f.normal) * dot(g.normal, g.normal) == dot(f.normal, g.normal) * dot(f.normal, g.normal);
      });
      REQUIRE(match != ref.end());
      CHECK(f.cone_volume == match->cone_volume);
    }
    CHECK(cone_sum == p.volume());
    CHECK(p.volume() == oracle::volume3(p.vertices()));
  }
}

TEST_CASE("cut pieces partition the volume") {
  Generator base(5, 3);
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.degenerate_rate = 0});
    const CutPieces pieces = cut(p, random_cut(gen, p, false));
    CHECK(pieces.minus.volume() + pieces.plus.volume() == p.volume());
    CHECK(pieces.slice.dim() <= 2);
  }
}

TEST_CASE("four-dimensional hulls") {
  const Polytope t = standard_simplex(4, 4, Scalar(2));
  CHECK(t.volume() == Scalar(Rational(16, 24)));
  const Polytope c = cube(4);
  CHECK(c.facets().size() == 8);
  CHECK(c.volume() == Scalar(1));
  CHECK(standard_face(4, 3).dim() == 2);
}
