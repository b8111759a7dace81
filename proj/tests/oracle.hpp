#pragma once

// Independent reference computations for n = 3, written without the library's
// hull, triangulation or measure code: facets from cross products of point
// triples, areas from exact planar shoelace sums.

#include <vector>

#include "vallab/linalg.hpp"
#include "vallab/zeta.hpp"

namespace oracle {

using vallab::Scalar;
using vallab::Vector;

struct Facet {
  Vector normal;  // outward, unnormalized
  Scalar support;
  Scalar normalized_area;  // area / |normal|
  Scalar cone_volume;      // (1/3) support normalized_area
};

/// Facets of the hull of `points` (full-dimensional in R^3).
std::vector<Facet> facets3(const std::vector<Vector>& points);
Scalar volume3(const std::vector<Vector>& points);
/// sum over facets with nonzero support of zeta(x.u/h, cone volume).
Scalar pi_zeta3(const std::vector<Vector>& points, const vallab::ZetaSpec& zeta, const Vector& x);
/// Area of the convex hull of planar points.
Scalar polygon_area(std::vector<std::pair<Scalar, Scalar>> pts);

}  // namespace oracle
