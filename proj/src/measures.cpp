#include "vallab/measures.hpp"

namespace vallab {

Scalar DiscreteNormalMeasure::total() const {
  Scalar s(0);
  for (const auto& [u, w] : atoms) s += w;
  return s;
}

void DiscreteNormalMeasure::add(const Vector& normal, const Scalar& weight) {
  if (weight.is_zero()) return;
  auto [it, inserted] = atoms.try_emplace(normal, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second.is_zero()) atoms.erase(it);
  }
}

DiscreteNormalMeasure cone_volume_measure(const Polytope& p) {
  DiscreteNormalMeasure m{MeasureKind::cone_volume, {}};
  for (const auto& f : p.facets()) m.add(f.normal, f.cone_volume);
  return m;
}

DiscreteNormalMeasure surface_area_measure(const Polytope& p) {
  DiscreteNormalMeasure m{MeasureKind::normalized_area, {}};
  for (const auto& f : p.facets()) m.add(f.normal, f.normalized_area);
  return m;
}

std::set<Vector> normals_o(const Polytope& p) {
  std::set<Vector> out;
  for (const auto& f : p.facets())
    if (!f.support.is_zero()) out.insert(f.normal);
  return out;
}

Scalar volume(const Polytope& p) { return p.volume(); }

Scalar projection_mixed(const Polytope& p, const Vector& x) {
  if (x.size() != p.ambient_dim()) throw DomainError("projection_mixed: dimension mismatch");
  if (is_zero(x)) throw DomainError("projection_mixed: x must be nonzero");
  Scalar s(0);
  for (const auto& f : p.facets()) s += abs(dot(x, f.normal)) * f.normalized_area;
  return s / Scalar(static_cast<long>(p.ambient_dim()));
}

}  // namespace vallab
