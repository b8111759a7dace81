// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "vallab/suites.hpp"

using namespace vallab;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string summary(const CheckReport& r) {
  std::string s = r.suite + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failed) + " failed";
  if (r.skipped) s += ", " + std::to_string(r.skipped) + " skipped";
  if (r.control_caught) s += *r.control_caught ? ", control caught" : ", control MISSED";
  if (!r.exact) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", max rel err %.3g", r.max_error);
    s += buf;
  }
  return s;
}

bool good(const CheckReport& r) { return r.passed() && r.checks > 0; }

SuiteConfig config(std::size_t trials, std::size_t n = 3, ScalarMode mode = ScalarMode::rational) {
  SuiteConfig c;
  c.seed = 20240601;
  c.trials = trials;
  c.n = n;
  c.mode = mode;
  return c;
}

std::vector<ZetaSpec> exact_zetas() {
  return {linear_zeta(), abs_power_zeta(1), abs_power_zeta(2), abs_power_zeta(3)};
}

Outcome valuation_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const CheckReport r3 = run_valuation_suite(standard_valuations(ScalarMode::rational), config(200, 3));
  const CheckReport r4 = run_valuation_suite(standard_valuations(ScalarMode::rational), config(50, 4));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.1f s (target < 60 s)", secs);
  return {good(r3) && good(r4) && secs < 60, "n=3 " + summary(r3) + "; n=4 " + summary(r4) + buf};
}

Outcome contravariance() {
  const CheckReport r = run_contravariance_suite(standard_valuations(ScalarMode::rational), config(100));
  return {good(r), summary(r)};
}

Outcome simplicity() {
  const CheckReport r = run_simplicity_suite(simple_valuations(ScalarMode::rational), config(100));
  return {good(r), summary(r)};
}

Outcome closed_form() {
  const CheckReport r = run_k1_suite(exact_zetas(), config(50));
  const bool witness = pi_zeta(standard_simplex(3, 3), linear_zeta(), unit_vector(3, 2)) == Scalar(Rational(1, 6));
  return {good(r) && witness, summary(r) + (witness ? "; witness T^3 -> 1/6" : "; witness WRONG")};
}

Outcome dissection() {
  const CheckReport r = run_dissection_suite(abs_power_zeta(2), config(50));
  return {good(r), summary(r)};
}

Outcome limit() {
  std::vector<ZetaSpec> zetas = exact_zetas();
  zetas.push_back(ZetaSpec::from_eta(UnaryFunction::plus_power(1)));
  const CheckReport exact = run_limit_suite(zetas, config(20));
  const CheckReport floats = run_limit_suite(
      {ZetaSpec::from_eta(UnaryFunction::abs_power(0.5)), ZetaSpec::from_eta(UnaryFunction::plus_power(1.5))},
      config(20));
  return {good(exact) && exact.exact && good(floats) && floats.max_error <= 1e-9,
          "exact " + summary(exact) + "; float " + summary(floats)};
}

Outcome projection() {
  const CheckReport r = run_projection_suite(config(100));
  return {good(r), summary(r)};
}

Outcome tensors() {
  const CheckReport r = run_tensor_suite(config(50));
  return {good(r), summary(r)};
}

Outcome round_trip() {
  SuiteConfig c = config(50);
  c.xs_per_trial = 10;
  const CheckReport r = run_extraction_suite(c);
  return {good(r), summary(r)};
}

Outcome gap_demo() {
  const ZetaSpec z = rational_part_zeta();
  const bool not_linear = z(Scalar(1), Scalar::sqrt2()) != Scalar::sqrt2() * z(Scalar(1), Scalar(1));
  const auto zs = standard_valuations(ScalarMode::quad);
  const CheckReport v = run_valuation_suite(zs, config(100, 3, ScalarMode::quad));
  const CheckReport c = run_contravariance_suite(zs, config(100, 3, ScalarMode::quad));
  const CheckReport s = run_simplicity_suite(simple_valuations(ScalarMode::quad), config(100, 3, ScalarMode::quad));
  return {not_linear && good(v) && good(c) && good(s),
          std::string(not_linear ? "zeta(1,sqrt2) = 0 != sqrt2 = sqrt2 zeta(1,1)" : "zeta is R-linear") + "; " +
              summary(v) + "; " + summary(c) + "; " + summary(s)};
}

Outcome negative_controls() {
  const CheckReport v = run_valuation_suite({squared_s_control()}, config(20));
  const CheckReport c = run_contravariance_suite({support_control()}, config(20));
  const bool ok = v.failed > 0 && !v.failures.empty() && c.failed > 0 && !c.failures.empty();
  return {ok, "squared_s: " + std::to_string(v.failed) + " failures, " + std::to_string(v.failures.size()) +
                  " witnesses stored; h_P: " + std::to_string(c.failed) + " failures, " +
                  std::to_string(c.failures.size()) + " witnesses stored"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"valuation identity", valuation_identity},
      {"SL(n) contravariance", contravariance},
      {"simplicity", simplicity},
      {"simplex closed form", closed_form},
      {"dissection identity", dissection},
      {"limit identity", limit},
      {"projection dual formula", projection},
      {"tensor valuations", tensors},
      {"classification round trip", round_trip},
      {"non-measurable gap demo", gap_demo},
      {"negative controls", negative_controls},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return all ? 0 : 1;
}
