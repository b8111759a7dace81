#pragma once

#include <map>
#include <set>

#include "vallab/polytope.hpp"

namespace vallab {

enum class MeasureKind { cone_volume, normalized_area };

/// Finite signed measure on canonical normal directions. Zero atoms are
/// never stored.
struct DiscreteNormalMeasure {
  MeasureKind kind = MeasureKind::cone_volume;
  std::map<Vector, Scalar> atoms;

  Scalar total() const;
  void add(const Vector& normal, const Scalar& weight);
};

/// V_P: atom FacetData::cone_volume at each facet normal (signed when o is
/// outside P).
DiscreteNormalMeasure cone_volume_measure(const Polytope& p);
/// S_P relative to the stored normals: atom normalized_area = a_u / |u|.
/// Pair each atom with norm2(normal) to recover a_u.
DiscreteNormalMeasure surface_area_measure(const Polytope& p);

/// N_o(P): facet normals whose facet hyperplane misses the origin.
std::set<Vector> normals_o(const Polytope& p);

/// Exact n-volume (0 when dim P < n).
Scalar volume(const Polytope& p);

/**
 * V_1(P, [-x, x]) = (1/n) * sum over facets of |x . u| * normalized_area.
 *
 * Hyperplanar P contributes through its two opposite facets; polytopes of
 * dimension <= n-2 give 0. Throws DomainError for x = o.
 */
Scalar projection_mixed(const Polytope& p, const Vector& x);

}  // namespace vallab
