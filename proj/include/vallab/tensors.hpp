#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "vallab/linalg.hpp"
#include "vallab/polytope.hpp"

namespace vallab {

using MultiIndex = std::vector<std::size_t>;

/**
 * Symmetric tensor of order p on R^n, stored sparsely by sorted multi-index.
 *
 * The stored value at i_1 <= ... <= i_p is the tensor entry T_{i_1...i_p}
 * (equal for every permutation). Multinomial factors enter only in
 * contraction:
 *
 *   <T, x^p> = sum over sorted i of T_i * multinomial(i) * x_{i_1}...x_{i_p}.
 *
 * Zero entries are never stored.
 */
class SymTensor {
 public:
  /// The zero tensor. Throws DomainError for p = 0 or n = 0.
  SymTensor(std::size_t order, std::size_t dim);

  std::size_t order() const { return p_; }
  std::size_t dim() const { return n_; }
  const std::map<MultiIndex, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Entry at any (not necessarily sorted) multi-index.
  Scalar at(MultiIndex idx) const;
  /// Adds to the entry at `idx` (sorted internally).
  void add(MultiIndex idx, const Scalar& v);
  /// this += c * v^p (the p-fold symmetric power of v).
  void add_power(const Vector& v, const Scalar& c);

  friend bool operator==(const SymTensor& s, const SymTensor& t) {
    return s.p_ == t.p_ && s.n_ == t.n_ && s.coeffs_ == t.coeffs_;
  }

 private:
  std::size_t p_;
  std::size_t n_;
  std::map<MultiIndex, Scalar> coeffs_;
};

/// p! / prod(multiplicity!) for a sorted multi-index.
Integer multinomial(const MultiIndex& sorted_idx);

/**
 * M^{0,p}_xi(P) = sum over u in N_o(P) of (u / h_P(u))^p xi(V_P(u)).
 *
 * u / h_P(u) does not depend on the scale of u, so canonical normals are used
 * directly and the result is exact. Throws DomainError for p = 0.
 */
SymTensor m0p(const Polytope& p, const CauchyFunctional& xi, std::size_t order);

/// <T, x^p>. Throws DomainError on dimension mismatch.
Scalar contract(const SymTensor& t, const Vector& x);

/// S with <S, x^p> = <T, (phi^{-1} x)^p>, i.e. phi^{-t} acting on T.
/// Throws DomainError when phi is singular or dimensions differ.
SymTensor act_inverse_transpose(const LinearMap& phi, const SymTensor& t);

}  // namespace vallab
