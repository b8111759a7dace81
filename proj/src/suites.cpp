#include "vallab/suites.hpp"

#include <memory>

#include "vallab/measures.hpp"

namespace vallab {

namespace {

std::vector<Vector> sample_xs(Generator& gen, std::size_t count) {
  std::vector<Vector> xs;
  for (std::size_t i = 0; i < count; ++i) xs.push_back(gen.nonzero_vector());
  return xs;
}

Scalar positive_rational(Generator& gen, long max_num, long max_den) {
  return Scalar(Rational(gen.uniform(1, max_num), gen.uniform(1, max_den)));
}

Scalar nonzero_rational(Generator& gen, long max_num, long max_den) {
  const Scalar v = positive_rational(gen, max_num, max_den);
  return gen.coin() ? v : -v;
}

Scalar factorial(std::size_t n) {
  Scalar f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= Scalar(static_cast<long>(k));
  return f;
}

// Runs `control` through `check` and records whether it was caught.
template <typename Check>
void run_control(CheckReport& report, const BlackBoxValuation& control, Check&& check) {
  CheckReport c = check(control);
  report.control_caught = report.control_caught.value_or(false) || c.failed > 0;
  for (const auto& f : c.failures)
    if (report.control_witnesses.size() < 3) report.control_witnesses.push_back(f);
}

}  // namespace

// ---------------------------------------------------------------- valuations

BlackBoxValuation pi_zeta_valuation(std::string name, ZetaSpec zeta) {
  return {std::move(name), Domain::all,
          [zeta = std::move(zeta)](const Polytope& p, const Vector& x) { return pi_zeta(p, zeta, x); }};
}

BlackBoxValuation pi_zeta_tilde_valuation(std::string name, ZetaSpec zeta) {
  return {std::move(name), Domain::all,
          [zeta = std::move(zeta)](const Polytope& p, const Vector& x) { return pi_zeta_tilde(p, zeta, x); }};
}

BlackBoxValuation projection_valuation() {
  return {"projection", Domain::all, [](const Polytope& p, const Vector& x) { return projection_mixed(p, x); }};
}

BlackBoxValuation theorem11_valuation(std::string name, ClassificationData data) {
  return {std::move(name), Domain::origin,
          [data = std::move(data)](const Polytope& p, const Vector& x) { return z_theorem11(p, data, x); }};
}

BlackBoxValuation theorem15_valuation(std::string name, ClassificationData data) {
  return {std::move(name), Domain::all,
          [data = std::move(data)](const Polytope& p, const Vector& x) { return z_theorem15(p, data, x); }};
}

BlackBoxValuation support_control() {
  return {"support_control", Domain::all, [](const Polytope& p, const Vector& x) {
            return p.is_empty() ? Scalar(0) : support(p, x);
          }};
}

BlackBoxValuation squared_s_control() { return pi_zeta_valuation("squared_s_control", squared_s_zeta()); }

ZetaSpec linear_zeta() { return ZetaSpec::from_eta(UnaryFunction::polynomial({Scalar(0), Scalar(1)})); }

ZetaSpec abs_power_zeta(unsigned p) { return ZetaSpec::from_eta(UnaryFunction::abs_power(p)); }

ZetaSpec rational_part_zeta() { return {UnaryFunction::polynomial({Scalar(0), Scalar(1)}), UnaryFunction()}; }

ZetaSpec squared_s_zeta() {
  return ZetaSpec::non_additive("squared_s", [](const Scalar&, const Scalar& s) { return s * s; });
}

ClassificationData mixed_theorem15_data() {
  ClassificationData d;
  d.zeta1 = linear_zeta();
  d.zeta2 = ZetaSpec::from_eta(UnaryFunction::polynomial({Scalar(1), Scalar(0), Scalar(-2)}));
  d.c_nm1 = Scalar(Rational(3, 2));
  d.c_nm1_tilde = Scalar(-2);
  d.c0 = Scalar(5);
  d.c0_prime = Scalar(Rational(-7, 3));
  d.c0_tilde = Scalar(Rational(1, 4));
  return d;
}

std::vector<BlackBoxValuation> simple_valuations(ScalarMode mode) {
  std::vector<BlackBoxValuation> zs;
  if (mode == ScalarMode::quad) {
    zs.push_back(pi_zeta_valuation("pi_zeta[t*a]", rational_part_zeta()));
  } else {
    zs.push_back(pi_zeta_valuation("pi_zeta[t]", linear_zeta()));
  }
  for (unsigned p = 1; p <= 3; ++p) zs.push_back(pi_zeta_valuation("pi_zeta[|t|^" + std::to_string(p) + "]", abs_power_zeta(p)));
  return zs;
}

std::vector<BlackBoxValuation> standard_valuations(ScalarMode mode) {
  std::vector<BlackBoxValuation> zs = simple_valuations(mode);
  const bool quad = mode == ScalarMode::quad;
  zs.push_back(pi_zeta_tilde_valuation(quad ? "pi_zeta_tilde[t*a]" : "pi_zeta_tilde[t]",
                                       quad ? rational_part_zeta() : linear_zeta()));
  zs.push_back(projection_valuation());
  ClassificationData d = mixed_theorem15_data();
  if (quad) d.zeta1 = rational_part_zeta();
  zs.push_back(theorem15_valuation("theorem15[mixed]", d));
  ClassificationData d11 = d;
  d11.zeta2 = ZetaSpec();
  d11.c_nm1_tilde = Scalar(0);
  d11.c0_tilde = Scalar(0);
  zs.push_back(theorem11_valuation("theorem11[mixed]", d11));
  return zs;
}

// ---------------------------------------------------------------- suites

CheckReport run_valuation_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg,
                                const std::optional<BlackBoxValuation>& control) {
  CheckReport report;
  report.suite = "valuation";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const bool origin = trial % 2 == 1;
    const Polytope p = random_polytope(gen, {.contain_origin = origin});
    const Hyperplane h = random_cut(gen, p, origin);
    const auto xs = sample_xs(gen, cfg.xs_per_trial);
    for (const auto& z : zs) {
      if (z.domain == Domain::origin && !origin) continue;
      CheckReport r = check_valuation(z, p, h, xs);
      r.trials = 0;
      report.merge(r);
    }
    if (control) run_control(report, *control, [&](const BlackBoxValuation& c) { return check_valuation(c, p, h, xs); });
    ++report.trials;
  }
  return report;
}

CheckReport run_contravariance_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg,
                                     const std::optional<BlackBoxValuation>& control) {
  CheckReport report;
  report.suite = "contravariance";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const bool origin = trial % 2 == 1;
    const Polytope p = random_polytope(gen, {.contain_origin = origin});
    const LinearMap phi = random_unimodular(gen);
    const auto xs = sample_xs(gen, cfg.xs_per_trial);
    for (const auto& z : zs) {
      if (z.domain == Domain::origin && !origin) continue;
      CheckReport r = check_contravariance(z, p, phi, xs);
      r.trials = 0;
      report.merge(r);
    }
    if (control)
      run_control(report, *control, [&](const BlackBoxValuation& c) { return check_contravariance(c, p, phi, xs); });
    ++report.trials;
  }
  return report;
}

CheckReport run_simplicity_suite(const std::vector<BlackBoxValuation>& zs, const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "simplicity";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const std::size_t d = trial % cfg.n;
    const bool with_origin = (trial / cfg.n) % 2 == 0;
    const Polytope p = random_simplex(gen, d, with_origin);
    const auto xs = sample_xs(gen, cfg.xs_per_trial);
    for (const auto& z : zs) {
      CheckReport r = check_simplicity(z, p, xs);
      r.trials = 0;
      report.merge(r);
    }
    ++report.trials;
  }
  return report;
}

CheckReport run_k1_suite(const std::vector<ZetaSpec>& zetas, const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "k1";
  report.seed = cfg.seed;
  // Fixed witness: Pi(T^3)(e_3) with zeta = t s is 1/6.
  report.compare({{"witness", "T^3, x = e_3, zeta = t s"}}, pi_zeta(standard_simplex(3, 3), linear_zeta(), unit_vector(3, 2)),
                 Scalar(Rational(1, 6)));
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const std::size_t n = trial % 2 == 0 ? 3 : 4;
    const Scalar s = positive_rational(gen, 9, 4);
    const Scalar t = nonzero_rational(gen, 9, 4);
    for (const auto& zeta : zetas) {
      CheckReport r = check_k1(zeta, n, s, t);
      r.trials = 0;
      report.merge(r);
    }
    ++report.trials;
  }
  return report;
}

CheckReport run_dissection_suite(const ZetaSpec& zeta, const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "dissection";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    ClassificationData data;
    data.zeta1 = zeta;
    data.c_nm1 = Scalar(gen.rational(5, 3));
    data.c0 = Scalar(gen.rational(5, 3));
    data.c0_prime = Scalar(gen.rational(5, 3));
    const auto d = static_cast<std::size_t>(gen.uniform(2, static_cast<long>(cfg.n)));
    const Scalar s = positive_rational(gen, 9, 4);
    const Scalar t = nonzero_rational(gen, 9, 4);
    const long den = gen.uniform(2, 9);
    const Scalar lambda(Rational(gen.uniform(1, den - 1), den));
    CheckReport r = check_dissection_b1(data, cfg.n, s, t, lambda, d);
    r.trials = 0;
    report.merge(r);
    ++report.trials;
  }
  return report;
}

CheckReport run_limit_suite(const std::vector<ZetaSpec>& zetas, const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "j5";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const Scalar s = positive_rational(gen, 9, 4);
    const Scalar r = positive_rational(gen, 9, 4);
    for (const auto& zeta : zetas) {
      CheckReport c = check_limit_j5(zeta, cfg.n, s, r);
      c.trials = 0;
      report.merge(c);
    }
    ++report.trials;
  }
  return report;
}

Scalar projection_prism_oracle(const Polytope& p, const Vector& x) {
  const std::size_t n = p.ambient_dim();
  const Scalar xx = norm2(x);
  std::vector<Vector> pts;
  for (const auto& v : p.vertices()) {
    Vector q = v - (dot(v, x) / xx) * x;
    pts.push_back(q + x);
    pts.push_back(std::move(q));
  }
  const Polytope prism = hull(pts, n);
  return Scalar(2) * prism.volume() / Scalar(static_cast<long>(n));
}

CheckReport run_projection_suite(const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "projection";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.degenerate_rate = 0});
    Vector x = gen.nonzero_vector();
    report.compare({{"P", polytope_to_json(p)}, {"x", vector_to_json(x)}}, projection_mixed(p, x),
                   projection_prism_oracle(p, x));
    // Lower-dimensional closed form on sT^{n-1} at t e_n.
    const Scalar s = positive_rational(gen, 9, 4);
    const Scalar t = nonzero_rational(gen, 9, 4);
    const std::size_t n = cfg.n;
    const Scalar expected = Scalar(2) / factorial(n) * pow(s, static_cast<unsigned>(n - 1)) * abs(t);
    report.compare({{"n", n}, {"s", scalar_to_json(s)}, {"t", scalar_to_json(t)}},
                   projection_mixed(standard_simplex(n, n - 1, s), t * unit_vector(n, n - 1)), expected);
    ++report.trials;
  }
  return report;
}

CheckReport run_tensor_suite(const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "tensor";
  report.seed = cfg.seed;
  const Generator base(cfg.seed, cfg.n, cfg.mode);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.contain_origin = true});
    const LinearMap phi = random_unimodular(gen);
    const Hyperplane h = random_cut(gen, p, true);
    const CutPieces pieces = cut(p, h);
    const Polytope q = apply_linear(p, phi);
    const auto xs = sample_xs(gen, cfg.xs_per_trial);
    CauchyFunctional xi = CauchyFunctional::identity();
    if (cfg.mode == ScalarMode::quad) xi = {Scalar(1), Scalar(0)};
    const Json in{{"P", polytope_to_json(p)}};
    for (std::size_t order = 1; order <= 3; ++order) {
      const SymTensor t = m0p(p, xi, order);
      std::vector<Scalar> tp(order + 1, Scalar(0));
      tp.back() = Scalar(1);
      const UnaryFunction power = UnaryFunction::polynomial(tp);
      const ZetaSpec zeta(xi.alpha * power, xi.beta * power);
      const Scalar sign = order % 2 == 0 ? Scalar(1) : Scalar(-1);
      for (const auto& x : xs) {
        Json ix = in;
        ix["p"] = order;
        ix["x"] = vector_to_json(x);
        ix["identity"] = "contraction";
        report.compare(ix, contract(t, x), pi_zeta(p, zeta, x));
        ix["identity"] = "parity";
        report.compare(ix, contract(t, -x), sign * contract(t, x));
      }
      Json ic = in;
      ic["p"] = order;
      ic["identity"] = "contravariance";
      const SymTensor lhs = m0p(q, xi, order);
      const SymTensor rhs = act_inverse_transpose(phi, t);
      report.compare(ic, Scalar(lhs == rhs ? 1 : 0), Scalar(1));
      if (!pieces.minus.is_empty() && !pieces.plus.is_empty()) {
        SymTensor a = m0p(pieces.minus, xi, order);
        const SymTensor plus = m0p(pieces.plus, xi, order);
        for (const auto& [idx, v] : plus.coeffs()) a.add(idx, v);
        SymTensor b = m0p(pieces.slice, xi, order);
        for (const auto& [idx, v] : t.coeffs()) b.add(idx, v);
        ic["identity"] = "cut";
        report.compare(ic, Scalar(a == b ? 1 : 0), Scalar(1));
      }
    }
    ++report.trials;
  }
  return report;
}

CheckReport run_round_trip(const BlackBoxValuation& z, const ExtractionOptions& options, const SuiteConfig& cfg,
                           ExtractionResult* extracted) {
  ExtractionResult res = extract_classification(z, options);
  CheckReport report = res.report;
  report.suite = "round_trip:" + z.name;
  report.seed = cfg.seed;
  const BlackBoxValuation rebuilt = options.domain == Domain::origin ? theorem11_valuation("rebuilt", res.data)
                                                                     : theorem15_valuation("rebuilt", res.data);
  const Generator base(cfg.seed, options.n, options.quad ? ScalarMode::quad : ScalarMode::rational);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Generator gen = base.fork(trial);
    const Polytope p = random_polytope(gen, {.contain_origin = options.domain == Domain::origin});
    for (const auto& x : sample_xs(gen, cfg.xs_per_trial))
      report.compare({{"P", polytope_to_json(p)}, {"x", vector_to_json(x)}}, rebuilt.eval(p, x), z.eval(p, x));
    ++report.trials;
  }
  if (extracted) *extracted = std::move(res);
  return report;
}

CheckReport run_extraction_suite(const SuiteConfig& cfg) {
  CheckReport report;
  report.suite = "extraction";
  report.seed = cfg.seed;

  struct Case {
    std::string name;
    ClassificationData truth;
    ExtractionOptions options;
  };
  auto poly = [](std::vector<long> c) {
    std::vector<Scalar> s;
    for (long v : c) s.push_back(Scalar(v));
    return UnaryFunction::polynomial(s);
  };
  std::vector<Case> cases;
  auto origin_case = [&](std::string name, UnaryFunction eta, Scalar c_nm1, Scalar c0, Scalar c0p) {
    ClassificationData d;
    d.zeta1 = ZetaSpec::from_eta(std::move(eta));
    d.c_nm1 = std::move(c_nm1);
    d.c0 = std::move(c0);
    d.c0_prime = std::move(c0p);
    cases.push_back({std::move(name), std::move(d), {3, Domain::origin, false}});
  };
  origin_case("eta=t^2,c0=2,c0'=-1,c=5", poly({0, 0, 1}), Scalar(5), Scalar(2), Scalar(-1));
  origin_case("eta=t", poly({0, 1}), Scalar(0), Scalar(0), Scalar(0));
  origin_case("eta=|t|^3-t", UnaryFunction::abs_power(3) + poly({0, -1}), Scalar(Rational(-1, 2)), Scalar(0), Scalar(3));
  origin_case("eta=t_+^2+1", UnaryFunction::plus_power(2) + poly({1}), Scalar(2), Scalar(Rational(1, 3)), Scalar(0));
  origin_case("eta=table", UnaryFunction::table({{Scalar(-2), Scalar(1)}, {Scalar(0), Scalar(-1)}, {Scalar(Rational(3, 2)), Scalar(4)}}),
              Scalar(-3), Scalar(Rational(7, 5)), Scalar(Rational(7, 5)));
  cases.push_back({"general:mixed", mixed_theorem15_data(), {3, Domain::all, false}});
  {
    ClassificationData d;
    d.zeta1 = ZetaSpec::from_eta(UnaryFunction::minus_power(1));
    d.zeta2 = ZetaSpec::from_eta(poly({0, 2, 1}));
    d.c_nm1 = Scalar(-1);
    d.c_nm1_tilde = Scalar(Rational(5, 2));
    d.c0 = Scalar(Rational(-1, 3));
    d.c0_prime = Scalar(4);
    d.c0_tilde = Scalar(-6);
    cases.push_back({"general:second", d, {3, Domain::all, false}});
  }
  {
    ClassificationData d;
    d.zeta1 = rational_part_zeta();
    d.c_nm1 = Scalar(1);
    d.c0 = Scalar(2);
    cases.push_back({"quad:t*a", d, {3, Domain::origin, true}});
  }

  for (const auto& c : cases) {
    const BlackBoxValuation z = c.options.domain == Domain::origin ? theorem11_valuation(c.name, c.truth)
                                                                   : theorem15_valuation(c.name, c.truth);
    ExtractionResult res;
    CheckReport r = run_round_trip(z, c.options, cfg, &res);
    // Recovered constants and zeta samples against the truth.
    const Json in{{"case", c.name}};
    auto cmp = [&](const char* what, const Scalar& got, const Scalar& want) {
      Json j = in;
      j["quantity"] = what;
      r.compare(j, got, want);
    };
    cmp("c_nm1", res.data.c_nm1, c.truth.c_nm1);
    cmp("c0", res.data.c0, c.truth.c0);
    cmp("c0_prime", res.data.c0_prime, c.truth.c0_prime);
    if (c.options.domain == Domain::all) {
      cmp("c_nm1_tilde", res.data.c_nm1_tilde, c.truth.c_nm1_tilde);
      cmp("c0_tilde", res.data.c0_tilde, c.truth.c0_tilde);
    }
    std::vector<Scalar> masses{Scalar(1), Scalar(Rational(-2, 3))};
    if (c.options.quad) masses.push_back(Scalar(Rational(1), Rational(-1, 2)));
    for (long k = -12; k <= 12; ++k) {
      const Scalar t(Rational(k, 4));
      for (const auto& s : masses) {
        cmp("zeta1", res.data.zeta1(t, s), c.truth.zeta1(t, s));
        if (c.options.domain == Domain::all) cmp("zeta2", res.data.zeta2(t, s), c.truth.zeta2(t, s));
      }
    }
    r.trials = 1;
    report.merge(r);
  }
  return report;
}

}  // namespace vallab
