#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vallab/linalg.hpp"
#include "vallab/scalar.hpp"

namespace vallab {

/**
 * One facet of a polytope, or one side of a hyperplanar polytope.
 *
 * `normal` is never normalized: it is the canonical representative returned
 * by canonical_direction(), so all quantities below are stated relative to
 * it. With a_u the (n-1)-area of the facet and |normal| its Euclidean length:
 *
 *   support         = h_P(normal)
 *   normalized_area = a_u / |normal|
 *   cone_volume     = (1/n) * support * normalized_area   (signed)
 *
 * All three are exact; only `area()` involves a square root.
 */
struct FacetData {
  Vector normal;
  Scalar support;
  Scalar normalized_area;
  Scalar cone_volume;
  std::vector<std::size_t> vertex_indices;

  /// a_u as a float, normalized_area * |normal|.
  double area() const;
};

/// Facet of a polytope inside its own affine hull, in the projected frame.
struct RelativeFacet {
  Vector normal;  // length dim(P)
  Scalar offset;
  std::vector<std::size_t> vertex_indices;
};

/**
 * Convex polytope in vertex representation.
 *
 * Immutable. Construction via hull() removes redundant points and fills the
 * facet cache eagerly. Facet convention by affine dimension d in R^n:
 *   d = n     the (n-1)-faces with outward normals;
 *   d = n-1   two entries with opposite normals +-u orthogonal to aff(P);
 *   d <= n-2  no facets.
 * The empty polytope has dim() == -1.
 */
class Polytope {
 public:
  /// The empty polytope in R^n.
  explicit Polytope(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return n_; }
  int dim() const { return dim_; }
  bool is_empty() const { return dim_ < 0; }
  bool full_dimensional() const { return dim_ == static_cast<int>(n_); }

  /// Extreme points, sorted lexicographically.
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<FacetData>& facets() const { return facets_; }
  /// Facets of P relative to aff(P), expressed in the coordinates listed by frame().
  const std::vector<RelativeFacet>& relative_facets() const { return relative_facets_; }
  /// Coordinate indices onto which aff(P) projects injectively.
  const std::vector<std::size_t>& frame() const { return frame_; }

  /// Exact n-volume; zero unless full-dimensional.
  const Scalar& volume() const { return volume_; }

  /// Pairs of vertex indices spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Polytope& p, const Polytope& q) {
    return p.n_ == q.n_ && p.vertices_ == q.vertices_;
  }

 private:
  friend Polytope hull(const std::vector<Vector>& points, std::size_t ambient_dim);

  std::size_t n_;
  int dim_ = -1;
  std::vector<Vector> vertices_;
  std::vector<FacetData> facets_;
  std::vector<RelativeFacet> relative_facets_;
  std::vector<std::size_t> frame_;
  Scalar volume_{0};
};

/**
 * Convex hull of a finite point set.
 *
 * Facets are found by brute force: every affinely independent dim-subset of
 * the points proposes a hyperplane, kept when all points lie on one side.
 * This costs O(m^(d+1)) for m points in dimension d and is meant for small
 * inputs (n <= 6, a few dozen points). Throws DomainError when a point does
 * not have `ambient_dim` coordinates.
 */
Polytope hull(const std::vector<Vector>& points, std::size_t ambient_dim);

/// h_P(u) = max over vertices of u . v. Throws DomainError for empty P.
Scalar support(const Polytope& p, const Vector& u);

struct CutPieces {
  Polytope minus;  // P with side(x) <= 0
  Polytope plus;   // P with side(x) >= 0
  Polytope slice;  // P with side(x) == 0
};
CutPieces cut(const Polytope& p, const Hyperplane& h);

/// hull of phi(v) over the vertices. Throws DomainError when phi is singular.
Polytope apply_linear(const Polytope& p, const LinearMap& phi);
/// [P, o]
Polytope hull_with_origin(const Polytope& p);
/// Translate by t.
Polytope translate(const Polytope& p, const Vector& t);
/// Scale by a positive or negative factor (0 gives {o} or the empty set).
Polytope scale(const Polytope& p, const Scalar& factor);

bool contains(const Polytope& p, const Vector& x);
bool contains_origin(const Polytope& p);
/// o in relint P. Throws DomainError for empty P.
bool contains_origin_relint(const Polytope& p);

/// V_0: 1 for nonempty P, 0 for the empty set.
int euler(const Polytope& p);

/// Max |h_P(u) - h_Q(u)| over a fixed set of unit directions. Approximate:
/// a lower bound for the true Hausdorff distance, exact when the maximizing
/// direction is a coordinate or diagonal direction.
double hausdorff_distance_approx(const Polytope& p, const Polytope& q);

/// s * [o, e_1, ..., e_d] in R^n.
Polytope standard_simplex(std::size_t n, std::size_t d, const Scalar& s = Scalar(1));
/// s * [e_1, ..., e_d] in R^n (the face of s*T^d opposite the origin).
Polytope standard_face(std::size_t n, std::size_t d, const Scalar& s = Scalar(1));
/// [lo, hi]^n
Polytope cube(std::size_t n, const Scalar& lo = Scalar(0), const Scalar& hi = Scalar(1));

}  // namespace vallab
