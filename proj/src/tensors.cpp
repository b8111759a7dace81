#include "vallab/tensors.hpp"

#include <algorithm>

namespace vallab {

namespace {

// Calls fn(idx) for every sorted multi-index of length p over {0..n-1}.
template <typename Fn>
void for_each_sorted(std::size_t p, std::size_t n, Fn&& fn) {
  MultiIndex idx(p, 0);
  while (true) {
    fn(const_cast<const MultiIndex&>(idx));
    std::size_t k = p;
    while (k > 0 && idx[k - 1] == n - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < p; ++j) idx[j] = idx[k - 1];
  }
}

}  // namespace

SymTensor::SymTensor(std::size_t order, std::size_t dim) : p_(order), n_(dim) {
  if (order == 0) throw DomainError("tensor order must be >= 1");
  if (dim == 0) throw DomainError("tensor dimension must be >= 1");
}

Scalar SymTensor::at(MultiIndex idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Scalar(0) : it->second;
}

void SymTensor::add(MultiIndex idx, const Scalar& v) {
  if (idx.size() != p_) throw DomainError("multi-index length differs from tensor order");
  for (auto i : idx)
    if (i >= n_) throw DomainError("multi-index entry out of range");
  if (v.is_zero()) return;
  std::sort(idx.begin(), idx.end());
  auto [it, inserted] = coeffs_.try_emplace(std::move(idx), v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void SymTensor::add_power(const Vector& v, const Scalar& c) {
  if (v.size() != n_) throw DomainError("vector dimension differs from tensor dimension");
  if (c.is_zero()) return;
  for_each_sorted(p_, n_, [&](const MultiIndex& idx) {
    Scalar prod = c;
    for (auto i : idx) {
      if (v[i].is_zero()) return;
      prod *= v[i];
    }
    add(idx, prod);
  });
}

Integer multinomial(const MultiIndex& idx) {
  Integer num(1);
  for (std::size_t k = 2; k <= idx.size(); ++k) num *= k;
  Integer den(1);
  std::size_t run = 0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    run = (k > 0 && idx[k] == idx[k - 1]) ? run + 1 : 1;
    den *= run;
  }
  return num / den;
}

SymTensor m0p(const Polytope& p, const CauchyFunctional& xi, std::size_t order) {
  SymTensor t(order, p.ambient_dim());
  for (const auto& f : p.facets()) {
    if (f.support.is_zero()) continue;
    const Scalar inv = Scalar(1) / f.support;
    t.add_power(inv * f.normal, xi(f.cone_volume));
  }
  return t;
}

Scalar contract(const SymTensor& t, const Vector& x) {
  if (x.size() != t.dim()) throw DomainError("contract: dimension mismatch");
  Scalar total(0);
  for (const auto& [idx, v] : t.coeffs()) {
    Scalar term = v * Scalar(Rational(multinomial(idx)));
    for (auto i : idx) term *= x[i];
    total += term;
  }
  return total;
}

SymTensor act_inverse_transpose(const LinearMap& phi, const SymTensor& t) {
  if (phi.dim() != t.dim()) throw DomainError("act_inverse_transpose: dimension mismatch");
  const Matrix m = phi.inverse().matrix();
  const std::size_t n = t.dim();
  SymTensor out(t.order(), n);
  // S_j = sum over all index tuples i of T_i * prod_k M[i_k][j_k]; each stored
  // entry of T stands for all distinct permutations of its multi-index.
  for (const auto& [idx, v] : t.coeffs()) {
    MultiIndex perm = idx;
    do {
      for_each_sorted(t.order(), n, [&](const MultiIndex& j) {
        Scalar prod = v;
        for (std::size_t k = 0; k < perm.size(); ++k) {
          const Scalar& e = m[perm[k]][j[k]];
          if (e.is_zero()) return;
          prod *= e;
        }
        out.add(j, prod);
      });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace vallab
