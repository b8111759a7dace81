#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vallab/io.hpp"
#include "vallab/polytope.hpp"
#include "vallab/valuations.hpp"

namespace vallab {

enum class ScalarMode { rational, quad };

/**
 * Seeded source of random geometry. Identical seed and parameters give an
 * identical stream on every platform: draws use a fixed 64-bit engine and
 * an explicit rejection sampler rather than the implementation-defined
 * standard distributions.
 */
class Generator {
 public:
  struct Bounds {
    std::size_t max_points = 12;
    long max_numerator = 12;  // coordinates are p/q with |p| <= this
    long max_denominator = 8;
  };

  Generator(std::uint64_t seed, std::size_t ambient_dim, ScalarMode mode = ScalarMode::rational);
  Generator(std::uint64_t seed, std::size_t ambient_dim, ScalarMode mode, Bounds bounds);

  /// Independent generator for trial `index`, seeded by hash(seed, index).
  Generator fork(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::size_t ambient_dim() const { return n_; }
  ScalarMode mode() const { return mode_; }
  const Bounds& bounds() const { return bounds_; }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(double p_true = 0.5);
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num, long max_den);
  /// A rational, or in quad mode sometimes a + b*sqrt2 with small b.
  Scalar scalar(long max_num, long max_den);
  /// Random point with coordinates from scalar(bounds).
  Vector point();
  /// Nonzero vector with small coordinates.
  Vector nonzero_vector();

 private:
  std::uint64_t seed_;
  std::size_t n_;
  ScalarMode mode_;
  Bounds bounds_;
  std::mt19937_64 engine_;
};

/// Splitmix-style mixing of (seed, index).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

/// Product of at most `max_factors` elementary shears with integer factors in
/// [-3, 3]; det is exactly 1.
LinearMap random_unimodular(Generator& gen, std::size_t max_factors = 6);
/// A d-simplex: d+1 affinely independent random points, one of them o when
/// with_origin. d in [0, n].
Polytope random_simplex(Generator& gen, std::size_t d, bool with_origin);

struct PolytopeOptions {
  bool contain_origin = false;     // include o among the points
  double degenerate_rate = 0.15;   // chance of a lower-dimensional polytope
};
/// Hull of at most max_points random points.
Polytope random_polytope(Generator& gen, const PolytopeOptions& options = {});
/// Hyperplane meeting the interior of P's hull (through o when requested).
Hyperplane random_cut(Generator& gen, const Polytope& p, bool through_origin);

/// Domain of a valuation: origin-containing polytopes or all polytopes.
enum class Domain { origin, all };

struct BlackBoxValuation {
  std::string name;
  Domain domain = Domain::all;
  std::function<Scalar(const Polytope&, const Vector&)> eval;
};

struct Failure {
  Json inputs;
  std::string lhs;
  std::string rhs;
};

/**
 * Outcome of a property check. `failed` counts every failing comparison and
 * is zero exactly when the check passed. For suites that run a negative
 * control, `control_caught` records whether the control was detected; a
 * suite whose control passes is itself broken.
 */
struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::vector<Failure> failures;  // the first kMaxStoredFailures witnesses
  bool exact = true;
  double max_error = 0;  // float suites only
  std::optional<bool> control_caught;
  std::vector<Failure> control_witnesses;

  static constexpr std::size_t kMaxStoredFailures = 20;

  bool passed() const { return failed == 0 && control_caught.value_or(true); }
  void merge(const CheckReport& other);
  void skip(std::string reason);
  void compare(const Json& inputs, const Scalar& lhs, const Scalar& rhs);
  void compare_approx(const Json& inputs, double lhs, double rhs, double tolerance);
  Json to_json() const;
};

/// Z(P n H-) + Z(P n H+) - Z(P) - Z(P n H) = 0 for every x. Skips (recorded)
/// when a piece is empty or, for origin-domain valuations, misses o.
CheckReport check_valuation(const BlackBoxValuation& z, const Polytope& p, const Hyperplane& h,
                            const std::vector<Vector>& xs);
/// Z(phi P)(x) = Z(P)(phi^{-1} x). Throws DomainError unless phi is unimodular.
CheckReport check_contravariance(const BlackBoxValuation& z, const Polytope& p, const LinearMap& phi,
                                 const std::vector<Vector>& xs);
/// Z(P)(x) = 0 for a lower-dimensional P.
CheckReport check_simplicity(const BlackBoxValuation& z, const Polytope& p, const std::vector<Vector>& xs);

/// Pi_zeta(sT^n)(t e_n) = zeta(t/s, s^n/n!).
CheckReport check_k1(const ZetaSpec& zeta, std::size_t n, const Scalar& s, const Scalar& t);

/**
 * The dissection identity for Z = z_theorem11(data) on sT^d in R^n.
 *
 * For 2 <= d <= n-1:
 *   Z(sT^d)(te_n) + Z(s That^{d-1})(lambda t e_n)
 *     = Z(sT^d)(lambda t e_n) + Z(sT^d)((1-lambda) t e_n),
 * That^{d-1} = [o, e_1, e_3, ..., e_d].
 *
 * For d = n the scaled simplices lambda^{1/n} sT^n are irrational, so the
 * check uses the exact pieces instead: with H = {x : (1-lambda)x_1 = lambda x_2},
 *   Z(sT^n) + Z(sT^n n H) = Z(sT^n n H-) + Z(sT^n n H+)      at t e_n,
 *   Pi(sT^n n H-)(t e_n) = zeta(t/s, lambda s^n/n!),
 *   Pi(sT^n n H+)(t e_n) = zeta(t/s, (1-lambda) s^n/n!),
 * which is the scale-free form of the same identity.
 * Throws DomainError when 0 < lambda < 1, s > 0, t != 0 or 2 <= d <= n fail.
 */
CheckReport check_dissection_b1(const ClassificationData& data, std::size_t n, const Scalar& s, const Scalar& t,
                                const Scalar& lambda, std::size_t d);

/**
 * Off-axis closed form Pi_zeta(sT^n)(x_1 e_1 - r e_2) = zeta((x_1 - r)/s, s^n/n!)
 * on x_1 = r(1 +- 2^-k), k = 1..steps, and the two-sided approach to the
 * on-point value zeta(0, s^n/n!). Exact zeta: closed form compared exactly,
 * final gap <= tolerance. Float zeta: everything within tolerance.
 */
CheckReport check_limit_j5(const ZetaSpec& zeta, std::size_t n, const Scalar& s, const Scalar& r,
                           std::size_t steps = 200, double tolerance = 1e-9);

/// Extraction settings. `quad` also recovers the sqrt2 components of zeta.
struct ExtractionOptions {
  std::size_t n = 3;
  Domain domain = Domain::origin;
  bool quad = false;
};

/// Recovered data plus the sampled eta tables and any non-classifiable witness.
struct ExtractionResult {
  ClassificationData data;
  /// eta tables on t in {-3, ..., 3} step 1/4 for each recovered component,
  /// keyed "zeta1.eta_a" etc.
  std::vector<std::pair<std::string, std::vector<std::pair<Scalar, Scalar>>>> tables;
  CheckReport report;
};

/**
 * Recovers classification data from a black box by probing simplices.
 *
 * Origin domain: c0 = Z[o,e1](e_n), c0' = Z{o}(e_n) - c0,
 * c_{n-1} = (n!/2)(Z(T^{n-1})(e_n) - c0), and
 * eta(t) = n! (Z(T^n)(t e_n) - c0 - c_{n-1} V_1(T^n, [-te_n, te_n])),
 * with t = 0 probed at x = e_1 - e_2. The recovered zeta queries Z on demand,
 * so it is exact at every t, not only on the table grid.
 *
 * General domain: the same recipe on T (giving a's) and on T -> Z(T') with
 * T' the face opposite o (giving b's), then
 *   c_{n-1} = a_{n-1} - b_{n-1}, c~_{n-1} = b_{n-1}, c0 = b0,
 *   c~0 = a0 - b0, c0' = a0',
 *   zeta2 = f2 - 2 c_{n-1} |t| s,  zeta1 = f1 - f2 + 2 c_{n-1} |t| s.
 */
ExtractionResult extract_classification(const BlackBoxValuation& z, const ExtractionOptions& options);

}  // namespace vallab
