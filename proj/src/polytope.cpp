#include "vallab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace vallab {

double FacetData::area() const {
  return normalized_area.to_double() * std::sqrt(norm2(normal).to_double());
}

Polytope::Polytope(std::size_t ambient_dim) : n_(ambient_dim) {}

namespace {

using Simplex = std::vector<std::size_t>;

Vector project(const Vector& v, const std::vector<std::size_t>& coords) {
  Vector p;
  p.reserve(coords.size());
  for (auto c : coords) p.push_back(v[c]);
  return p;
}

Matrix differences(const std::vector<Vector>& pts, const std::vector<std::size_t>& idx) {
  Matrix rows;
  rows.reserve(idx.size());
  for (std::size_t k = 1; k < idx.size(); ++k) rows.push_back(pts[idx[k]] - pts[idx[0]]);
  return rows;
}

std::size_t affine_rank(const std::vector<Vector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  return rank(differences(pts, idx));
}

Scalar factorial(std::size_t k) {
  Scalar f(1);
  for (std::size_t i = 2; i <= k; ++i) f *= Scalar(static_cast<long>(i));
  return f;
}

bool next_combination(std::vector<std::size_t>& comb, std::size_t m) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < m - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool subset_of(const std::vector<std::size_t>& small, const std::vector<std::size_t>& sorted_big) {
  return std::all_of(small.begin(), small.end(), [&](std::size_t i) {
    return std::binary_search(sorted_big.begin(), sorted_big.end(), i);
  });
}

// Determinant of the square matrix formed by `rows` (from row `row` down)
// and the columns in `cols`, by Laplace expansion along the first row. With
// `permanent` set all cofactor signs are +, which bounds the absolute sum of
// the expansion terms when the entries are nonnegative.
double laplace(const std::vector<std::vector<double>>& rows, std::size_t row, std::vector<std::size_t>& cols,
               bool permanent = false) {
  if (cols.size() == 1) return rows[row][cols[0]];
  double total = 0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const double a = rows[row][cols[k]];
    if (a == 0) continue;
    const std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    const double minor = laplace(rows, row + 1, cols, permanent);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    total += (permanent || k % 2 == 0) ? a * minor : -a * minor;
  }
  return total;
}

// Relative slack for the floating-point sign filter. A side value is a sum
// of at most d! * d products of d coordinate differences; its rounding error
// is below (a few dozen ulps) times the same sum taken in absolute values.
constexpr double kFilterSlack = 1e-10;

// Facets of a full-dimensional point set in R^d (d >= 1), brute force.
// Returned vertex_indices index into `pts` and may include non-extreme points.
//
// Candidate hyperplanes are first screened in double precision with an
// error bound; only candidates the filter cannot reject are decided with
// exact arithmetic, so the output is exact.
std::vector<RelativeFacet> enumerate_facets(const std::vector<Vector>& pts, std::size_t d) {
  const std::size_t m = pts.size();
  std::vector<RelativeFacet> found;
  if (d == 1) {
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (pts[i][0] < pts[lo][0]) lo = i;
      if (pts[i][0] > pts[hi][0]) hi = i;
    }
    found.push_back({Vector{Scalar(-1)}, -pts[lo][0], {lo}});
    found.push_back({Vector{Scalar(1)}, pts[hi][0], {hi}});
    return found;
  }
  std::vector<std::vector<double>> approx(m, std::vector<double>(d));
  bool finite = true;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      approx[i][c] = pts[i][c].to_double();
      finite = finite && std::isfinite(approx[i][c]) && std::abs(approx[i][c]) < 1e30 &&
               (approx[i][c] != 0 || pts[i][c].is_zero());
    }

  std::vector<std::size_t> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  std::vector<std::vector<double>> rows(d - 1, std::vector<double>(d));
  std::vector<std::vector<double>> abs_rows(d - 1, std::vector<double>(d));
  std::vector<double> normal(d);
  std::vector<double> abs_normal(d);
  std::vector<std::size_t> cols;
  std::vector<int> sides(m);
  do {
    bool covered = false;
    for (const auto& f : found) {
      if (subset_of(comb, f.vertex_indices)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;

    if (finite) {
      const auto& base = approx[comb[0]];
      for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          rows[r][c] = approx[comb[r + 1]][c] - base[c];
          abs_rows[r][c] = std::abs(approx[comb[r + 1]][c]) + std::abs(base[c]);
        }
      for (std::size_t j = 0; j < d; ++j) {
        cols.clear();
        for (std::size_t c = 0; c < d; ++c)
          if (c != j) cols.push_back(c);
        normal[j] = laplace(rows, 0, cols);
        if (j % 2 == 1) normal[j] = -normal[j];
        abs_normal[j] = laplace(abs_rows, 0, cols, true);
      }
      bool pos = false;
      bool neg = false;
      for (std::size_t i = 0; i < m && !(pos && neg); ++i) {
        double s = 0;
        double bound = 0;
        for (std::size_t c = 0; c < d; ++c) {
          s += normal[c] * (approx[i][c] - base[c]);
          bound += abs_normal[c] * (std::abs(approx[i][c]) + std::abs(base[c]));
        }
        if (s > kFilterSlack * bound) pos = true;
        if (s < -kFilterSlack * bound) neg = true;
      }
      if (pos && neg) continue;
    }

    const Matrix exact_rows = differences(pts, comb);
    Vector exact_normal = cofactor_normal(exact_rows);
    if (is_zero(exact_normal)) continue;
    const Scalar offset = dot(exact_normal, pts[comb[0]]);
    int pos = 0;
    int neg = 0;
    for (std::size_t i = 0; i < m && !(pos && neg); ++i) {
      sides[i] = (dot(exact_normal, pts[i]) - offset).sign();
      pos |= sides[i] > 0;
      neg |= sides[i] < 0;
    }
    if (pos && neg) continue;
    if (pos) exact_normal = -exact_normal;
    exact_normal = canonical_direction(exact_normal);
    RelativeFacet f{exact_normal, dot(exact_normal, pts[comb[0]]), {}};
    for (std::size_t i = 0; i < m; ++i)
      if (sides[i] == 0) f.vertex_indices.push_back(i);
    found.push_back(std::move(f));
  } while (next_combination(comb, m));
  return found;
}

// Pulling triangulation of the face with vertex set `face` (sorted) and
// affine dimension k, using the facet lattice in `facets`.
void pull(const std::vector<Vector>& pts, const std::vector<RelativeFacet>& facets,
          const std::vector<std::size_t>& face, std::size_t k, Simplex& prefix,
          std::vector<Simplex>& out) {
  const std::size_t apex = face.front();
  if (k == 0) {
    prefix.push_back(apex);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  std::set<std::vector<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::vector<std::size_t> g;
    std::set_intersection(face.begin(), face.end(), f.vertex_indices.begin(), f.vertex_indices.end(),
                          std::back_inserter(g));
    if (g.size() < k || std::binary_search(g.begin(), g.end(), apex)) continue;
    if (g.size() == face.size()) continue;
    if (subfaces.count(g) || affine_rank(pts, g) != k - 1) continue;
    subfaces.insert(std::move(g));
  }
  prefix.push_back(apex);
  for (const auto& g : subfaces) pull(pts, facets, g, k - 1, prefix, out);
  prefix.pop_back();
}

std::vector<Simplex> triangulate(const std::vector<Vector>& pts, const std::vector<RelativeFacet>& facets,
                                 const std::vector<std::size_t>& face, std::size_t k) {
  std::vector<Simplex> out;
  Simplex prefix;
  pull(pts, facets, face, k, prefix, out);
  return out;
}

// Sum over (n-1)-simplices in R^n of vol_{n-1} of their projection dropping
// coordinate `drop`.
Scalar projected_volume(const std::vector<Vector>& verts, const std::vector<Simplex>& simplices,
                        std::size_t drop) {
  Scalar total(0);
  for (const auto& s : simplices) {
    Matrix rows;
    for (std::size_t k = 1; k < s.size(); ++k) {
      Vector diff = verts[s[k]] - verts[s[0]];
      diff.erase(diff.begin() + static_cast<std::ptrdiff_t>(drop));
      rows.push_back(std::move(diff));
    }
    total += abs(determinant(std::move(rows)));
  }
  return total / factorial(verts.front().size() - 1);
}

std::size_t first_nonzero(const Vector& v) {
  return static_cast<std::size_t>(
      std::find_if(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); }) - v.begin());
}

}  // namespace

Polytope hull(const std::vector<Vector>& input, std::size_t n) {
  for (const auto& p : input)
    if (p.size() != n) throw DomainError("hull: point dimension does not match ambient dimension");
  Polytope out(n);
  if (input.empty()) return out;

  std::vector<Vector> pts(input);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const EchelonForm ef = pts.size() > 1 ? echelon(differences(pts, all)) : EchelonForm{};
  const std::size_t d = ef.rank;
  out.dim_ = static_cast<int>(d);
  out.frame_ = ef.pivot_columns;

  if (d == 0) {
    out.vertices_ = {pts.front()};
    return out;
  }

  std::vector<Vector> proj;
  proj.reserve(pts.size());
  for (const auto& p : pts) proj.push_back(project(p, out.frame_));

  std::vector<RelativeFacet> facets = enumerate_facets(proj, d);

  // Extreme points: incident facet normals span R^d.
  std::vector<std::size_t> remap(pts.size(), std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix normals;
    for (const auto& f : facets)
      if (std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(), i)) normals.push_back(f.normal);
    if (normals.size() >= d && rank(std::move(normals)) == d) {
      remap[i] = keep.size();
      keep.push_back(i);
    }
  }
  std::vector<Vector> proj_vertices;
  for (auto i : keep) {
    out.vertices_.push_back(pts[i]);
    proj_vertices.push_back(proj[i]);
  }
  for (auto& f : facets) {
    std::vector<std::size_t> idx;
    for (auto i : f.vertex_indices)
      if (remap[i] != std::numeric_limits<std::size_t>::max()) idx.push_back(remap[i]);
    f.vertex_indices = std::move(idx);
  }
  out.relative_facets_ = std::move(facets);

  const auto& verts = out.vertices_;
  std::vector<std::size_t> vall(verts.size());
  for (std::size_t i = 0; i < vall.size(); ++i) vall[i] = i;

  if (d == n) {
    const Scalar nfact = factorial(n);
    Scalar vol(0);
    for (const auto& s : triangulate(proj_vertices, out.relative_facets_, vall, n))
      vol += abs(determinant(differences(verts, s)));
    out.volume_ = vol / nfact;

    for (const auto& rf : out.relative_facets_) {
      FacetData fd;
      fd.normal = rf.normal;
      fd.support = rf.offset;
      fd.vertex_indices = rf.vertex_indices;
      const auto simplices = triangulate(proj_vertices, out.relative_facets_, rf.vertex_indices, n - 1);
      const std::size_t drop = first_nonzero(fd.normal);
      fd.normalized_area = projected_volume(verts, simplices, drop) / abs(fd.normal[drop]);
      Scalar cone(0);
      for (const auto& s : simplices) {
        Matrix rows;
        for (auto i : s) rows.push_back(verts[i]);
        cone += abs(determinant(std::move(rows)));
      }
      cone /= nfact;
      fd.cone_volume = fd.support.sign() < 0 ? -cone : cone;
      out.facets_.push_back(std::move(fd));
    }
  } else if (d + 1 == n) {
    const auto ortho = null_space(differences(verts, vall), n);
    const Vector u = canonical_direction(ortho.front());
    const auto simplices = triangulate(proj_vertices, out.relative_facets_, vall, d);
    const std::size_t drop = first_nonzero(u);
    const Scalar area = projected_volume(verts, simplices, drop) / abs(u[drop]);
    const Scalar nn(static_cast<long>(n));
    for (int orientation : {1, -1}) {
      FacetData fd;
      fd.normal = orientation > 0 ? u : -u;
      fd.support = dot(fd.normal, verts.front());
      fd.normalized_area = area;
      fd.cone_volume = fd.support * area / nn;
      fd.vertex_indices = vall;
      out.facets_.push_back(std::move(fd));
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (dim_ < 1) return out;
  if (dim_ == 1) return {{0, 1}};
  const std::size_t m = vertices_.size();
  std::vector<std::vector<std::size_t>> incident(m);
  for (std::size_t f = 0; f < relative_facets_.size(); ++f)
    for (auto v : relative_facets_[f].vertex_indices) incident[v].push_back(f);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(incident[i].begin(), incident[i].end(), incident[j].begin(), incident[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      std::vector<std::size_t> face = relative_facets_[common.front()].vertex_indices;
      for (std::size_t k = 1; k < common.size() && face.size() > 2; ++k) {
        std::vector<std::size_t> next;
        const auto& other = relative_facets_[common[k]].vertex_indices;
        std::set_intersection(face.begin(), face.end(), other.begin(), other.end(), std::back_inserter(next));
        face = std::move(next);
      }
      if (face.size() == 2) out.emplace_back(i, j);
    }
  }
  return out;
}

Scalar support(const Polytope& p, const Vector& u) {
  if (p.is_empty()) throw DomainError("support function of the empty polytope");
  Scalar best = dot(u, p.vertices().front());
  for (std::size_t i = 1; i < p.vertices().size(); ++i) best = std::max(best, dot(u, p.vertices()[i]));
  return best;
}

CutPieces cut(const Polytope& p, const Hyperplane& h) {
  const std::size_t n = p.ambient_dim();
  if (h.normal.size() != n) throw DomainError("cut: hyperplane dimension mismatch");
  if (is_zero(h.normal)) throw DomainError("cut: hyperplane normal is zero");
  std::vector<Vector> minus;
  std::vector<Vector> plus;
  std::vector<Vector> slice;
  const auto& verts = p.vertices();
  std::vector<Scalar> side;
  side.reserve(verts.size());
  for (const auto& v : verts) {
    side.push_back(h.side(v));
    const int s = side.back().sign();
    if (s <= 0) minus.push_back(v);
    if (s >= 0) plus.push_back(v);
    if (s == 0) slice.push_back(v);
  }
  for (const auto& [i, j] : p.edges()) {
    if (side[i].sign() * side[j].sign() >= 0) continue;
    const Scalar t = side[i] / (side[i] - side[j]);
    Vector x = verts[i] + t * (verts[j] - verts[i]);
    minus.push_back(x);
    plus.push_back(x);
    slice.push_back(std::move(x));
  }
  return {hull(minus, n), hull(plus, n), hull(slice, n)};
}

Polytope apply_linear(const Polytope& p, const LinearMap& phi) {
  if (phi.dim() != p.ambient_dim()) throw DomainError("apply_linear: dimension mismatch");
  if (phi.det().is_zero()) throw DomainError("apply_linear: singular map");
  std::vector<Vector> image;
  image.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) image.push_back(phi.apply(v));
  return hull(image, p.ambient_dim());
}

Polytope hull_with_origin(const Polytope& p) {
  std::vector<Vector> pts = p.vertices();
  pts.push_back(zero_vector(p.ambient_dim()));
  return hull(pts, p.ambient_dim());
}

Polytope translate(const Polytope& p, const Vector& t) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return hull(pts, p.ambient_dim());
}

Polytope scale(const Polytope& p, const Scalar& factor) {
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) pts.push_back(factor * v);
  return hull(pts, p.ambient_dim());
}

namespace {

// Position of x relative to P: -1 outside (or off the affine hull),
// 0 on the relative boundary, +1 in the relative interior.
int locate(const Polytope& p, const Vector& x) {
  const auto& verts = p.vertices();
  if (p.dim() == 0) return verts.front() == x ? 1 : -1;
  Matrix rows;
  for (std::size_t k = 1; k < verts.size(); ++k) rows.push_back(verts[k] - verts[0]);
  rows.push_back(x - verts[0]);
  if (rank(std::move(rows)) != static_cast<std::size_t>(p.dim())) return -1;
  const Vector px = project(x, p.frame());
  int result = 1;
  for (const auto& f : p.relative_facets()) {
    const int s = (dot(f.normal, px) - f.offset).sign();
    if (s > 0) return -1;
    if (s == 0) result = 0;
  }
  return result;
}

}  // namespace

bool contains(const Polytope& p, const Vector& x) {
  if (p.is_empty()) return false;
  if (x.size() != p.ambient_dim()) throw DomainError("contains: dimension mismatch");
  return locate(p, x) >= 0;
}

bool contains_origin(const Polytope& p) { return contains(p, zero_vector(p.ambient_dim())); }

bool contains_origin_relint(const Polytope& p) {
  if (p.is_empty()) throw DomainError("contains_origin_relint of the empty polytope");
  return locate(p, zero_vector(p.ambient_dim())) > 0;
}

int euler(const Polytope& p) { return p.is_empty() ? 0 : 1; }

double hausdorff_distance_approx(const Polytope& p, const Polytope& q) {
  if (p.is_empty() || q.is_empty()) throw DomainError("Hausdorff distance needs nonempty polytopes");
  const std::size_t n = p.ambient_dim();
  std::vector<std::vector<double>> dirs;
  for (std::size_t i = 0; i < n; ++i) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> u(n, 0.0);
      u[i] = s;
      dirs.push_back(u);
    }
    for (std::size_t j = i + 1; j < n; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          std::vector<double> u(n, 0.0);
          u[i] = si;
          u[j] = sj;
          dirs.push_back(u);
        }
  }
  // Fixed pseudo-random directions (64-bit LCG, reproducible everywhere).
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  for (int k = 0; k < 512; ++k) {
    std::vector<double> u(n);
    for (auto& c : u) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      c = static_cast<double>(state >> 11) / static_cast<double>(1ULL << 53) * 2.0 - 1.0;
    }
    dirs.push_back(u);
  }
  auto h = [](const Polytope& poly, const std::vector<double>& u) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& v : poly.vertices()) {
      double s = 0;
      for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i].to_double();
      best = std::max(best, s);
    }
    return best;
  };
  double dist = 0;
  for (auto& u : dirs) {
    double len = 0;
    for (double c : u) len += c * c;
    len = std::sqrt(len);
    if (len == 0) continue;
    for (auto& c : u) c /= len;
    dist = std::max(dist, std::abs(h(p, u) - h(q, u)));
  }
  return dist;
}

Polytope standard_simplex(std::size_t n, std::size_t d, const Scalar& s) {
  std::vector<Vector> pts{zero_vector(n)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(s * unit_vector(n, i));
  return hull(pts, n);
}

Polytope standard_face(std::size_t n, std::size_t d, const Scalar& s) {
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < d; ++i) pts.push_back(s * unit_vector(n, i));
  return hull(pts, n);
}

Polytope cube(std::size_t n, const Scalar& lo, const Scalar& hi) {
  std::vector<Vector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U ? hi : lo;
    pts.push_back(std::move(v));
  }
  return hull(pts, n);
}

}  // namespace vallab
