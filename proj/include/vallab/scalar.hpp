#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace vallab {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Malformed textual or JSON input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain of an operation (o not in P, x = o, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

int sign(const Rational& q);

/// Parses "p", "-p", "p/q" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/**
 * An element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
 *
 * Equality is componentwise since sqrt(2) is irrational; the order is the
 * order of the reals and is decided exactly by `sign()`. Every operation
 * short-circuits when both operands are rational, so rational-only
 * workloads pay little for the extension.
 */
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadScalar sqrt2() { return {Rational(0), Rational(1)}; }
  static QuadScalar fraction(long p, long q) { return QuadScalar(Rational(p, q)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_integer() const;

  /// Exact sign of a + b*sqrt(2).
  int sign() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  /// Throws DomainError on division by zero.
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  QuadScalar operator-() const { return {-a_, -b_}; }

  /// Galois conjugate a - b*sqrt(2).
  QuadScalar conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 2 b^2 (nonzero for nonzero x).
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

using Scalar = QuadScalar;

Scalar abs(const Scalar& x);
/// x^k for an integer k >= 0.
Scalar pow(const Scalar& x, unsigned k);

/// "a" for rational values, otherwise "a+b*sqrt2" / "a-b*sqrt2".
std::string to_string(const Scalar& x);
/// Accepts the output of to_string, plus plain rationals and decimals.
Scalar parse_scalar(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Scalar& x);

std::size_t hash_value(const Scalar& x);

/**
 * An additive map xi(a + b*sqrt2) = alpha*a + beta*b on Q(sqrt 2).
 *
 * It is Q-linear by construction. It is R-linear (i.e. multiplication by a
 * constant c) exactly when beta = alpha*sqrt2; `linear(c)` builds that case.
 * With rational alpha and beta the image is rational, and with beta != 0 the
 * map is not R-linear: xi(sqrt2) = beta differs from sqrt2*xi(1) =
 * sqrt2*alpha.
 */
struct CauchyFunctional {
  Scalar alpha{1};
  Scalar beta{0};

  static CauchyFunctional identity() { return linear(Scalar(1)); }
  static CauchyFunctional linear(const Scalar& c) { return {c, c * Scalar::sqrt2()}; }
  static CauchyFunctional zero() { return {Scalar(0), Scalar(0)}; }

  bool is_real_linear() const { return beta == alpha * Scalar::sqrt2(); }

  Scalar operator()(const Scalar& x) const { return alpha * Scalar(x.a()) + beta * Scalar(x.b()); }
};

Scalar cauchy_apply(const CauchyFunctional& xi, const Scalar& x);

}  // namespace vallab

template <>
struct std::hash<vallab::QuadScalar> {
  std::size_t operator()(const vallab::QuadScalar& x) const noexcept {
    return vallab::hash_value(x);
  }
};
