#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vallab/scalar.hpp"

namespace vallab {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
/// Parses "x1,x2,...,xn" (scalar literals separated by commas).
Vector parse_vector(std::string_view text);
std::string to_string(const Vector& v);

Scalar dot(const Vector& x, const Vector& y);
Vector operator+(const Vector& x, const Vector& y);
Vector operator-(const Vector& x, const Vector& y);
Vector operator*(const Scalar& s, const Vector& x);
Vector operator-(const Vector& x);
bool is_zero(const Vector& v);
/// Squared Euclidean length; exact.
Scalar norm2(const Vector& v);

Scalar determinant(Matrix m);
/// Rank of the row set.
std::size_t rank(Matrix m);

struct EchelonForm {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm echelon(Matrix m);

/// Basis of {y : rows[i] . y = 0 for all i}.
std::vector<Vector> null_space(Matrix rows, std::size_t ncols);

/// Generalized cross product of n-1 vectors in R^n: the cofactor vector
/// orthogonal to all of them (zero iff they are dependent).
Vector cofactor_normal(std::span<const Vector> rows);

/**
 * Canonical positive rescaling of a nonzero direction.
 *
 * Rational directions become primitive integer vectors (coprime entries).
 * Directions with sqrt2 parts are scaled so that the first nonzero entry is
 * +1 or -1; if that makes them rational they are then made primitive. The
 * result depends only on the ray, so it serves as a map key.
 */
Vector canonical_direction(const Vector& v);

/// The set {x : normal . x = offset}.
struct Hyperplane {
  Vector normal;
  Scalar offset{0};

  /// normal . x - offset
  Scalar side(const Vector& x) const { return dot(normal, x) - offset; }
};

/// Square matrix with its exact determinant cached.
class LinearMap {
 public:
  explicit LinearMap(Matrix matrix);
  static LinearMap identity(std::size_t n);
  /// x_row += factor * x_col, i.e. the elementary matrix I + factor*E_{row,col}.
  static LinearMap shear(std::size_t n, std::size_t row, std::size_t col, const Scalar& factor);

  std::size_t dim() const { return matrix_.size(); }
  const Matrix& matrix() const { return matrix_; }
  const Scalar& det() const { return det_; }
  bool unimodular() const { return det_ == Scalar(1); }

  Vector apply(const Vector& x) const;
  /// Throws DomainError when singular.
  LinearMap inverse() const;
  LinearMap transpose() const;
  /// this * other
  LinearMap compose(const LinearMap& other) const;

  friend bool operator==(const LinearMap& x, const LinearMap& y) { return x.matrix_ == y.matrix_; }

 private:
  Matrix matrix_;
  Scalar det_;
};

}  // namespace vallab
