#include "vallab/linalg.hpp"

#include <algorithm>
#include <utility>

namespace vallab {

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v = zero_vector(n);
  v.at(i) = Scalar(1);
  return v;
}

Vector parse_vector(std::string_view text) {
  Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    v.push_back(parse_scalar(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

Scalar dot(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DomainError("dot: dimension mismatch");
  Scalar s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero() || y[i].is_zero()) continue;
    s += x[i] * y[i];
  }
  return s;
}

Vector operator+(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DomainError("vector sum: dimension mismatch");
  Vector r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vector operator-(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) throw DomainError("vector difference: dimension mismatch");
  Vector r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& x) {
  Vector r(x);
  for (auto& c : r) c *= s;
  return r;
}

Vector operator-(const Vector& x) {
  Vector r(x);
  for (auto& c : r) c = -c;
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

Scalar norm2(const Vector& v) { return dot(v, v); }

namespace {

// In-place Gaussian elimination; returns pivot columns. Applies `on_swap`
// for every row exchange so callers can track the determinant sign.
template <class OnSwap>
std::vector<std::size_t> eliminate(Matrix& m, std::size_t ncols, OnSwap on_swap) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    if (pick != row) {
      std::swap(m[pick], m[row]);
      on_swap();
    }
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < ncols; ++c)
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  int flips = 0;
  const auto pivots = eliminate(m, n, [&] { ++flips; });
  if (pivots.size() < n) return Scalar(0);
  Scalar det(flips % 2 == 0 ? 1 : -1);
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

EchelonForm echelon(Matrix m) {
  const std::size_t ncols = m.empty() ? 0 : m.front().size();
  auto pivots = eliminate(m, ncols, [] {});
  return {pivots.size(), std::move(pivots)};
}

std::size_t rank(Matrix m) { return echelon(std::move(m)).rank; }

std::vector<Vector> null_space(Matrix m, std::size_t ncols) {
  const auto pivots = eliminate(m, ncols, [] {});
  // Back-substitute to reduced row echelon form.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    const Scalar lead = m[i][pc];
    for (std::size_t c = pc; c < ncols; ++c) m[i][c] /= lead;
    for (std::size_t r = 0; r < i; ++r) {
      if (m[r][pc].is_zero()) continue;
      const Scalar f = m[r][pc];
      for (std::size_t c = pc; c < ncols; ++c) m[r][c] -= f * m[i][c];
    }
  }
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector y = zero_vector(ncols);
    y[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = -m[i][free];
    basis.push_back(std::move(y));
  }
  return basis;
}

Vector cofactor_normal(std::span<const Vector> rows) {
  const std::size_t n = rows.size() + 1;
  Vector normal(n);
  Matrix minor(n - 1, Vector(n - 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t c2 = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) minor[r][c2++] = rows[r][c];
    }
    Scalar d = determinant(minor);
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

namespace {

Vector primitive_integer(const Vector& v) {
  Integer lcm(1);
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c.a()));
  }
  std::vector<Integer> ints;
  ints.reserve(v.size());
  Integer g(0);
  for (const auto& c : v) {
    Integer k = boost::multiprecision::numerator(c.a()) * (lcm / boost::multiprecision::denominator(c.a()));
    g = boost::multiprecision::gcd(g, k);
    ints.push_back(std::move(k));
  }
  Vector out;
  out.reserve(v.size());
  for (auto& k : ints) out.emplace_back(Rational(g.is_zero() ? k : Integer(k / g)));
  return out;
}

}  // namespace

Vector canonical_direction(const Vector& v) {
  if (is_zero(v)) throw DomainError("canonical_direction of the zero vector");
  const bool rational = std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_rational(); });
  if (rational) return primitive_integer(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& c) { return !c.is_zero(); });
  const Scalar scale = abs(*lead);
  Vector w;
  w.reserve(v.size());
  for (const auto& c : v) w.push_back(c / scale);
  if (std::all_of(w.begin(), w.end(), [](const Scalar& c) { return c.is_rational(); }))
    return primitive_integer(w);
  return w;
}

LinearMap::LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {
  for (const auto& r : matrix_)
    if (r.size() != matrix_.size()) throw DomainError("LinearMap requires a square matrix");
  det_ = determinant(matrix_);
}

LinearMap LinearMap::identity(std::size_t n) {
  Matrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return LinearMap(std::move(m));
}

LinearMap LinearMap::shear(std::size_t n, std::size_t row, std::size_t col, const Scalar& factor) {
  if (row == col) throw DomainError("shear needs distinct row and column");
  Matrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  m.at(row).at(col) = factor;
  return LinearMap(std::move(m));
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != dim()) throw DomainError("LinearMap::apply: dimension mismatch");
  Vector y(dim());
  for (std::size_t i = 0; i < dim(); ++i) y[i] = dot(matrix_[i], x);
  return y;
}

LinearMap LinearMap::inverse() const {
  const std::size_t n = dim();
  if (det_.is_zero()) throw DomainError("inverse of a singular map");
  Matrix aug(n, Vector(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = matrix_[i][j];
    aug[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (aug[pick][col].is_zero()) ++pick;
    std::swap(aug[pick], aug[col]);
    const Scalar lead = aug[col][col];
    for (auto& c : aug[col]) c /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const Scalar f = aug[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  Matrix inv(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return LinearMap(std::move(inv));
}

LinearMap LinearMap::transpose() const {
  const std::size_t n = dim();
  Matrix t(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = matrix_[i][j];
  return LinearMap(std::move(t));
}

LinearMap LinearMap::compose(const LinearMap& other) const {
  const std::size_t n = dim();
  if (other.dim() != n) throw DomainError("compose: dimension mismatch");
  Matrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (matrix_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) m[i][j] += matrix_[i][k] * other.matrix_[k][j];
    }
  return LinearMap(std::move(m));
}

}  // namespace vallab
