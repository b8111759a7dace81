#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vallab/scalar.hpp"

namespace vallab {

/**
 * A continuous function R -> R, stored as a finite linear combination of
 * primitive terms:
 *
 *   power      t^k               (integer k >= 0)
 *   abs_power  |t|^p
 *   plus_power max(t, 0)^p
 *   minus_power max(-t, 0)^p
 *   table      piecewise linear through sorted knots, constant outside
 *   oracle     an arbitrary exact callable
 *
 * Evaluation is exact on Scalars when every term is (`exact()`); terms with
 * a non-integer exponent only support `approx()`.
 */
class UnaryFunction {
 public:
  enum class Kind { power, abs_power, plus_power, minus_power, table, oracle };

  struct Term {
    Kind kind = Kind::power;
    Scalar coeff{1};
    double exponent = 0;  // power, abs_power, plus_power, minus_power
    std::vector<std::pair<Scalar, Scalar>> knots;  // table
    std::shared_ptr<const std::function<Scalar(const Scalar&)>> oracle;
    std::string label;  // oracle
  };

  UnaryFunction() = default;  // the zero function

  static UnaryFunction zero() { return {}; }
  static UnaryFunction constant(const Scalar& c);
  /// coeffs[k] * t^k
  static UnaryFunction polynomial(const std::vector<Scalar>& coeffs);
  static UnaryFunction abs_power(double p);
  static UnaryFunction plus_power(double p);
  static UnaryFunction minus_power(double p);
  /// Knots need strictly increasing abscissae; at least one knot.
  static UnaryFunction table(std::vector<std::pair<Scalar, Scalar>> knots);
  static UnaryFunction oracle(std::function<Scalar(const Scalar&)> f, std::string label = "oracle");

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool exact() const;

  /// Throws DomainError when a term is not exactly evaluable.
  Scalar operator()(const Scalar& t) const;
  double approx(double t) const;

  friend UnaryFunction operator+(UnaryFunction f, const UnaryFunction& g);
  friend UnaryFunction operator*(const Scalar& c, UnaryFunction f);

 private:
  std::vector<Term> terms_;
};

/**
 * A binary function zeta(t, s) continuous in t and additive in s, realized on
 * Q(sqrt 2) as
 *
 *   zeta(t, a + b*sqrt2) = eta_a(t) * a + eta_b(t) * b.
 *
 * Additivity and the odd extension zeta(t, -s) = -zeta(t, s) hold by
 * construction. `from_eta(eta)` is the R-linear case zeta(t, s) = eta(t) * s.
 *
 * A ZetaSpec built with `non_additive` wraps an arbitrary callable and exists
 * only as a negative control for the property suites.
 */
class ZetaSpec {
 public:
  ZetaSpec() = default;  // zeta = 0
  ZetaSpec(UnaryFunction eta_a, UnaryFunction eta_b) : eta_a_(std::move(eta_a)), eta_b_(std::move(eta_b)) {}

  /// zeta(t, s) = eta(t) * s
  static ZetaSpec from_eta(const UnaryFunction& eta);
  static ZetaSpec non_additive(std::string label, std::function<Scalar(const Scalar&, const Scalar&)> f);

  const UnaryFunction& eta_a() const { return eta_a_; }
  const UnaryFunction& eta_b() const { return eta_b_; }
  bool additive() const { return custom_ == nullptr; }
  bool is_zero() const { return additive() && eta_a_.is_zero() && eta_b_.is_zero(); }
  bool exact() const;
  const std::string& label() const { return label_; }

  Scalar operator()(const Scalar& t, const Scalar& s) const;
  double approx(double t, const Scalar& s) const;

  /// Pointwise sum; both operands must be additive.
  friend ZetaSpec operator+(const ZetaSpec& x, const ZetaSpec& y);

 private:
  UnaryFunction eta_a_;
  UnaryFunction eta_b_;
  std::shared_ptr<const std::function<Scalar(const Scalar&, const Scalar&)>> custom_;
  std::string label_;
};

}  // namespace vallab
