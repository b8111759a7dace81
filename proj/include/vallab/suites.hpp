#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vallab/harness.hpp"
#include "vallab/tensors.hpp"

namespace vallab {

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n = 3;
  ScalarMode mode = ScalarMode::rational;
  std::size_t xs_per_trial = 5;
};

// Valuations wrapped as black boxes.
BlackBoxValuation pi_zeta_valuation(std::string name, ZetaSpec zeta);
BlackBoxValuation pi_zeta_tilde_valuation(std::string name, ZetaSpec zeta);
BlackBoxValuation projection_valuation();
BlackBoxValuation theorem11_valuation(std::string name, ClassificationData data);
BlackBoxValuation theorem15_valuation(std::string name, ClassificationData data);
/// Z(P)(x) = h_P(x): a valuation, but covariant rather than contravariant.
BlackBoxValuation support_control();
/// Pi_zeta with zeta(t, s) = s^2: contravariant but not a valuation.
BlackBoxValuation squared_s_control();

/// zeta(t, s) = t s
ZetaSpec linear_zeta();
/// zeta(t, s) = |t|^p s
ZetaSpec abs_power_zeta(unsigned p);
/// zeta(t, a + b sqrt2) = t a: additive, not R-linear in s.
ZetaSpec rational_part_zeta();
/// zeta(t, s) = s^2: not additive in s.
ZetaSpec squared_s_zeta();

/// Mixed constants for the general family (used by several suites).
ClassificationData mixed_theorem15_data();

/**
 * The valuation set of the cut and map suites: Pi_zeta for linear and |t|^p
 * (p = 1, 2, 3) zeta, Pi~_zeta, V_1(., [-x, x]) and the general seven-term
 * valuation with mixed constants. In quad mode zeta(t, a + b sqrt2) = t a
 * replaces the R-linear zeta.
 */
std::vector<BlackBoxValuation> standard_valuations(ScalarMode mode);
/// The simple members of standard_valuations.
std::vector<BlackBoxValuation> simple_valuations(ScalarMode mode);

/// Random (P, H) per trial; odd trials use P containing o and H through o,
/// where origin-domain valuations are also checked. With a control, the
/// control is run on the same trials and must fail.
CheckReport run_valuation_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg,
                                const std::optional<BlackBoxValuation>& control = std::nullopt);
CheckReport run_contravariance_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg,
                                     const std::optional<BlackBoxValuation>& control = std::nullopt);
/// Lower-dimensional simplices of dimension trial mod n, with and without o.
CheckReport run_simplicity_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg);
/// Random s > 0, t != 0 in dimensions 3 and 4, plus the fixed witness 1/6.
CheckReport run_k1_suite(const std::vector<ZetaSpec>& zetas, const SuiteConfig& cfg);
/// Random (s, t, lambda, d) in dimension cfg.n with random constants.
CheckReport run_dissection_suite(const ZetaSpec& zeta, const SuiteConfig& cfg);
/// Random (s, r) for each zeta; float zeta use the 1e-9 tolerance.
CheckReport run_limit_suite(const std::vector<ZetaSpec>& zetas, const SuiteConfig& cfg);
/// Facet-sum V_1 against the prism volume, plus the lower-dimensional
/// closed form (2/n!) s^{n-1} |t| on sT^{n-1}.
CheckReport run_projection_suite(const SuiteConfig& cfg);
/// Contraction consistency, contravariance, parity and the cut identity of
/// M^{0,p} for p = 1, 2, 3.
CheckReport run_tensor_suite(const SuiteConfig& cfg);

/// One classification round trip: extract from z, rebuild, compare on random
/// polytopes (cfg.trials polytopes times cfg.xs_per_trial points).
CheckReport run_round_trip(const BlackBoxValuation& z, const ExtractionOptions& options, const SuiteConfig& cfg,
                           ExtractionResult* extracted = nullptr);
/// Round trips for five origin-domain parameter sets, two general-domain
/// ones and one over Q(sqrt2); constants and zeta samples are compared
/// exactly against the truth.
CheckReport run_extraction_suite(const SuiteConfig& cfg);

/// Prism-volume oracle: (2/n) vol(P|x^perp + [o, x]).
Scalar projection_prism_oracle(const Polytope& p, const Vector& x);

}  // namespace vallab
