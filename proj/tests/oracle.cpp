#include "oracle.hpp"

#include <algorithm>

namespace oracle {

namespace {

Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool parallel_same(const Vector& a, const Vector& b) {
  return vallab::is_zero(cross(a, b)) && vallab::dot(a, b).sign() > 0;
}

using P2 = std::pair<Scalar, Scalar>;

Scalar turn(const P2& o, const P2& a, const P2& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

}  // namespace

Scalar polygon_area(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Scalar(0);
  // Andrew's monotone chain.
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && turn(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  Scalar twice(0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const P2& a = h[i];
    const P2& b = h[(i + 1) % h.size()];
    twice += a.first * b.second - b.first * a.second;
  }
  return vallab::abs(twice) / Scalar(2);
}

std::vector<Facet> facets3(const std::vector<Vector>& points) {
  std::vector<Facet> out;
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Vector u = cross(points[j] - points[i], points[k] - points[i]);
        if (vallab::is_zero(u)) continue;
        const Scalar h = vallab::dot(u, points[i]);
        bool below = true;
        bool above = true;
        for (const auto& p : points) {
          const int s = (vallab::dot(u, p) - h).sign();
          below = below && s <= 0;
          above = above && s >= 0;
        }
        if (!below && !above) continue;
        if (!below) u = -u;
        if (std::any_of(out.begin(), out.end(), [&](const Facet& f) { return parallel_same(f.normal, u); })) continue;
        const Scalar support = vallab::dot(u, points[i]);
        std::size_t drop = 0;
        while (u[drop].is_zero()) ++drop;
        std::vector<P2> flat;
        for (const auto& p : points) {
          if (vallab::dot(u, p) != support) continue;
          Vector q;
          for (std::size_t c = 0; c < 3; ++c)
            if (c != drop) q.push_back(p[c]);
          flat.emplace_back(q[0], q[1]);
        }
        const Scalar normalized = polygon_area(flat) / vallab::abs(u[drop]);
        out.push_back({u, support, normalized, support * normalized / Scalar(3)});
      }
  return out;
}

Scalar volume3(const std::vector<Vector>& points) {
  // Cone decomposition from the vertex centroid, an interior point.
  Vector c = vallab::zero_vector(3);
  for (const auto& p : points) c = c + p;
  c = (Scalar(1) / Scalar(static_cast<long>(points.size()))) * c;
  Scalar v(0);
  for (const auto& f : facets3(points)) v += (f.support - vallab::dot(f.normal, c)) * f.normalized_area / Scalar(3);
  return v;
}

Scalar pi_zeta3(const std::vector<Vector>& points, const vallab::ZetaSpec& zeta, const Vector& x) {
  Scalar total(0);
  for (const auto& f : facets3(points))
    if (!f.support.is_zero()) total += zeta(vallab::dot(x, f.normal) / f.support, f.cone_volume);
  return total;
}

}  // namespace oracle
