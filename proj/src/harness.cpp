#include "vallab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "vallab/measures.hpp"

namespace vallab {

// ---------------------------------------------------------------- generator

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Generator::Generator(std::uint64_t seed, std::size_t ambient_dim, ScalarMode mode)
    : Generator(seed, ambient_dim, mode, Bounds{}) {}

Generator::Generator(std::uint64_t seed, std::size_t ambient_dim, ScalarMode mode, Bounds bounds)
    : seed_(seed), n_(ambient_dim), mode_(mode), bounds_(bounds), engine_(seed) {
  if (ambient_dim == 0) throw DomainError("generator dimension must be positive");
}

Generator Generator::fork(std::uint64_t index) const { return {sub_seed(seed_, index), n_, mode_, bounds_}; }

long Generator::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long>(engine_());
  // Reject the low 2^64 mod range values so every residue is equally likely.
  const std::uint64_t threshold = (0 - range) % range;
  std::uint64_t x;
  do x = engine_();
  while (x < threshold);
  return lo + static_cast<long>(x % range);
}

bool Generator::coin(double p_true) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p_true;
}

Rational Generator::rational(long max_num, long max_den) {
  const long p = uniform(-max_num, max_num);
  const long q = uniform(1, max_den);
  return {p, q};
}

Scalar Generator::scalar(long max_num, long max_den) {
  Rational a = rational(max_num, max_den);
  if (mode_ == ScalarMode::quad && coin(0.5)) return {std::move(a), rational(3, 4)};
  return Scalar(std::move(a));
}

Vector Generator::point() {
  Vector v(n_);
  for (auto& c : v) c = scalar(bounds_.max_numerator, bounds_.max_denominator);
  return v;
}

Vector Generator::nonzero_vector() {
  while (true) {
    Vector v(n_);
    for (auto& c : v) c = scalar(3, 4);
    if (!is_zero(v)) return v;
  }
}

LinearMap random_unimodular(Generator& gen, std::size_t max_factors) {
  const std::size_t n = gen.ambient_dim();
  LinearMap phi = LinearMap::identity(n);
  if (n < 2 || max_factors == 0) return phi;
  const long count = gen.uniform(1, static_cast<long>(max_factors));
  for (long k = 0; k < count; ++k) {
    const auto row = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(n) - 1));
    auto col = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(n) - 2));
    if (col >= row) ++col;
    long factor = gen.uniform(-3, 2);
    if (factor >= 0) ++factor;  // nonzero, in [-3, 3]
    phi = LinearMap::shear(n, row, col, Scalar(factor)).compose(phi);
  }
  return phi;
}

Polytope random_simplex(Generator& gen, std::size_t d, bool with_origin) {
  const std::size_t n = gen.ambient_dim();
  if (d > n) throw DomainError("random_simplex: d exceeds the ambient dimension");
  while (true) {
    std::vector<Vector> pts;
    pts.push_back(with_origin ? zero_vector(n) : gen.point());
    for (std::size_t i = 0; i < d; ++i) pts.push_back(gen.point());
    Polytope p = hull(pts, n);
    if (p.dim() == static_cast<int>(d) && p.vertices().size() == d + 1) return p;
  }
}

Polytope random_polytope(Generator& gen, const PolytopeOptions& options) {
  const std::size_t n = gen.ambient_dim();
  const auto& b = gen.bounds();
  if (gen.coin(options.degenerate_rate)) {
    // Points base + sum_i (k_i / q) u_i in a random affine subspace of
    // dimension d < n, with integer directions u_i and one denominator q so
    // coordinates keep denominators <= max_denominator.
    const auto d = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(n) - 1));
    const long q = gen.uniform(1, b.max_denominator);
    const Scalar inv_q(Rational(1, q));
    auto small_integer = [&](long bound) {
      Scalar c(gen.uniform(-bound, bound));
      if (gen.mode() == ScalarMode::quad && gen.coin(0.25)) c += Scalar(gen.uniform(-1, 1)) * Scalar::sqrt2();
      return c;
    };
    Vector base = zero_vector(n);
    if (!options.contain_origin)
      for (auto& c : base) c = inv_q * small_integer(b.max_numerator);
    std::vector<Vector> dirs;
    while (dirs.size() < d) {
      Vector u(n);
      for (auto& c : u) c = small_integer(3);
      if (!is_zero(u)) dirs.push_back(std::move(u));
    }
    const long m = gen.uniform(static_cast<long>(d) + 1, std::max<long>(static_cast<long>(d) + 1, static_cast<long>(b.max_points)));
    std::vector<Vector> pts{base};
    for (long k = 1; k < m; ++k) {
      Vector v = base;
      for (const auto& u : dirs) v = v + (inv_q * Scalar(gen.uniform(-4, 4))) * u;
      pts.push_back(std::move(v));
    }
    return hull(pts, n);
  }
  while (true) {
    const long m = gen.uniform(static_cast<long>(n) + 1, std::max<long>(static_cast<long>(n) + 1, static_cast<long>(b.max_points)));
    std::vector<Vector> pts;
    if (options.contain_origin) pts.push_back(zero_vector(n));
    while (pts.size() < static_cast<std::size_t>(m)) pts.push_back(gen.point());
    Polytope p = hull(pts, n);
    if (p.full_dimensional()) return p;
  }
}

Hyperplane random_cut(Generator& gen, const Polytope& p, bool through_origin) {
  const std::size_t n = gen.ambient_dim();
  Vector normal;
  do {
    normal.assign(n, Scalar(0));
    for (auto& c : normal) {
      c = Scalar(gen.uniform(-3, 3));
      if (gen.mode() == ScalarMode::quad && gen.coin(0.25)) c += Scalar(Rational(gen.uniform(-1, 1))) * Scalar::sqrt2();
    }
  } while (is_zero(normal));
  if (through_origin || p.is_empty()) return {normal, Scalar(0)};
  // Through a point of relint P: halfway between the vertex centroid and a vertex.
  const auto& verts = p.vertices();
  Vector c = zero_vector(n);
  for (const auto& v : verts) c = c + v;
  c = Scalar(Rational(1, static_cast<long>(verts.size()))) * c;
  const auto& v = verts[static_cast<std::size_t>(gen.uniform(0, static_cast<long>(verts.size()) - 1))];
  c = Scalar(Rational(1, 2)) * (c + v);
  return {normal, dot(normal, c)};
}

// ---------------------------------------------------------------- reports

void CheckReport::merge(const CheckReport& other) {
  trials += other.trials;
  checks += other.checks;
  skipped += other.skipped;
  failed += other.failed;
  for (const auto& [reason, count] : other.skip_reasons) skip_reasons[reason] += count;
  for (const auto& f : other.failures)
    if (failures.size() < kMaxStoredFailures) failures.push_back(f);
  exact = exact && other.exact;
  max_error = std::max(max_error, other.max_error);
}

void CheckReport::skip(std::string reason) {
  ++skipped;
  ++skip_reasons[std::move(reason)];
}

void CheckReport::compare(const Json& inputs, const Scalar& lhs, const Scalar& rhs) {
  ++checks;
  if (lhs == rhs) return;
  ++failed;
  if (failures.size() < kMaxStoredFailures) failures.push_back({inputs, to_string(lhs), to_string(rhs)});
}

void CheckReport::compare_approx(const Json& inputs, double lhs, double rhs, double tolerance) {
  ++checks;
  exact = false;
  const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  max_error = std::max(max_error, std::isnan(err) ? INFINITY : err);
  if (err <= tolerance) return;
  ++failed;
  if (failures.size() < kMaxStoredFailures) failures.push_back({inputs, std::to_string(lhs), std::to_string(rhs)});
}

Json CheckReport::to_json() const {
  Json j{{"suite", suite},   {"seed", seed},       {"trials", trials}, {"checks", checks},
         {"skipped", skipped}, {"failed", failed}, {"exact", exact},   {"passed", passed()}};
  if (!exact) j["max_relative_error"] = max_error;
  if (!skip_reasons.empty()) j["skip_reasons"] = skip_reasons;
  auto dump = [](const std::vector<Failure>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return arr;
  };
  j["failures"] = dump(failures);
  if (control_caught) j["control"] = {{"caught", *control_caught}, {"witnesses", dump(control_witnesses)}};
  return j;
}

// ---------------------------------------------------------------- checks

namespace {

Json hyperplane_json(const Hyperplane& h) {
  return {{"normal", vector_to_json(h.normal)}, {"offset", scalar_to_json(h.offset)}};
}

Json map_json(const LinearMap& phi) {
  Json rows = Json::array();
  for (const auto& r : phi.matrix()) rows.push_back(vector_to_json(r));
  return rows;
}

bool in_domain(const BlackBoxValuation& z, const Polytope& p) {
  return z.domain == Domain::all || (!p.is_empty() && contains_origin(p));
}

Scalar factorial(std::size_t n) {
  Scalar f(1);
  for (std::size_t k = 2; k <= n; ++k) f *= Scalar(static_cast<long>(k));
  return f;
}

}  // namespace

CheckReport check_valuation(const BlackBoxValuation& z, const Polytope& p, const Hyperplane& h,
                            const std::vector<Vector>& xs) {
  CheckReport r;
  r.suite = "valuation:" + z.name;
  r.trials = 1;
  if (p.is_empty()) {
    r.skip("empty polytope");
    return r;
  }
  const CutPieces pieces = cut(p, h);
  if (pieces.minus.is_empty() || pieces.plus.is_empty()) {
    r.skip("cut misses the polytope");
    return r;
  }
  if (!in_domain(z, p) || !in_domain(z, pieces.minus) || !in_domain(z, pieces.plus) || !in_domain(z, pieces.slice)) {
    r.skip("a piece lies outside the domain");
    return r;
  }
  for (const auto& x : xs) {
    try {
      const Scalar lhs = z.eval(pieces.minus, x) + z.eval(pieces.plus, x);
      const Scalar rhs = z.eval(p, x) + z.eval(pieces.slice, x);
      r.compare({{"P", polytope_to_json(p)}, {"H", hyperplane_json(h)}, {"x", vector_to_json(x)}}, lhs, rhs);
    } catch (const DomainError& e) {
      r.skip(e.what());
    }
  }
  return r;
}

CheckReport check_contravariance(const BlackBoxValuation& z, const Polytope& p, const LinearMap& phi,
                                 const std::vector<Vector>& xs) {
  if (!phi.unimodular()) throw DomainError("check_contravariance: the map must have determinant 1");
  CheckReport r;
  r.suite = "contravariance:" + z.name;
  r.trials = 1;
  if (!in_domain(z, p)) {
    r.skip("polytope outside the domain");
    return r;
  }
  const Polytope q = apply_linear(p, phi);
  const LinearMap inv = phi.inverse();
  for (const auto& x : xs) {
    try {
      r.compare({{"P", polytope_to_json(p)}, {"phi", map_json(phi)}, {"x", vector_to_json(x)}}, z.eval(q, x),
                z.eval(p, inv.apply(x)));
    } catch (const DomainError& e) {
      r.skip(e.what());
    }
  }
  return r;
}

CheckReport check_simplicity(const BlackBoxValuation& z, const Polytope& p, const std::vector<Vector>& xs) {
  if (p.full_dimensional()) throw DomainError("check_simplicity: the polytope must be lower-dimensional");
  CheckReport r;
  r.suite = "simplicity:" + z.name;
  r.trials = 1;
  for (const auto& x : xs) {
    try {
      r.compare({{"P", polytope_to_json(p)}, {"x", vector_to_json(x)}}, z.eval(p, x), Scalar(0));
    } catch (const DomainError& e) {
      r.skip(e.what());
    }
  }
  return r;
}

CheckReport check_k1(const ZetaSpec& zeta, std::size_t n, const Scalar& s, const Scalar& t) {
  if (n < 2) throw DomainError("check_k1: n must be >= 2");
  if (s.sign() <= 0) throw DomainError("check_k1: s must be positive");
  if (t.is_zero()) throw DomainError("check_k1: t must be nonzero");
  CheckReport r;
  r.suite = "k1";
  r.trials = 1;
  const Polytope simplex = standard_simplex(n, n, s);
  const Scalar lhs = pi_zeta(simplex, zeta, t * unit_vector(n, n - 1));
  const Scalar rhs = zeta(t / s, pow(s, static_cast<unsigned>(n)) / factorial(n));
  r.compare({{"n", n}, {"s", scalar_to_json(s)}, {"t", scalar_to_json(t)}}, lhs, rhs);
  return r;
}

CheckReport check_dissection_b1(const ClassificationData& data, std::size_t n, const Scalar& s, const Scalar& t,
                                const Scalar& lambda, std::size_t d) {
  if (n < 3) throw DomainError("check_dissection_b1: n must be >= 3");
  if (d < 2 || d > n) throw DomainError("check_dissection_b1: need 2 <= d <= n");
  if (s.sign() <= 0) throw DomainError("check_dissection_b1: s must be positive");
  if (t.is_zero()) throw DomainError("check_dissection_b1: t must be nonzero");
  if (lambda.sign() <= 0 || lambda >= Scalar(1)) throw DomainError("check_dissection_b1: need 0 < lambda < 1");
  CheckReport r;
  r.suite = "dissection";
  r.trials = 1;
  const Json inputs{{"n", n}, {"d", d}, {"s", scalar_to_json(s)}, {"t", scalar_to_json(t)}, {"lambda", scalar_to_json(lambda)}};
  auto z = [&](const Polytope& p, const Vector& x) { return z_theorem11(p, data, x); };
  const Vector en = unit_vector(n, n - 1);
  const Polytope simplex = standard_simplex(n, d, s);

  // The cut identity itself, for every d.
  Vector hn = zero_vector(n);
  hn[0] = Scalar(1) - lambda;
  hn[1] = -lambda;
  const CutPieces pieces = cut(simplex, Hyperplane{hn, Scalar(0)});
  const Vector x = t * en;
  Json cut_inputs = inputs;
  cut_inputs["identity"] = "cut";
  r.compare(cut_inputs, z(simplex, x) + z(pieces.slice, x), z(pieces.minus, x) + z(pieces.plus, x));

  if (d < n) {
    std::vector<Vector> hat{zero_vector(n), s * unit_vector(n, 0)};
    for (std::size_t i = 2; i < d; ++i) hat.push_back(s * unit_vector(n, i));
    const Polytope that = hull(hat, n);
    Json b1_inputs = inputs;
    b1_inputs["identity"] = "b1";
    r.compare(b1_inputs, z(simplex, x) + z(that, lambda * x), z(simplex, lambda * x) + z(simplex, (Scalar(1) - lambda) * x));
    return r;
  }

  const Scalar vol = pow(s, static_cast<unsigned>(n)) / factorial(n);
  const Scalar ratio = t / s;
  const ZetaSpec& zeta = data.zeta1;
  Json f1_inputs = inputs;
  f1_inputs["identity"] = "f1:minus";
  r.compare(f1_inputs, pi_zeta(pieces.minus, zeta, x), zeta(ratio, lambda * vol));
  f1_inputs["identity"] = "f1:plus";
  r.compare(f1_inputs, pi_zeta(pieces.plus, zeta, x), zeta(ratio, (Scalar(1) - lambda) * vol));
  f1_inputs["identity"] = "f1";
  r.compare(f1_inputs, pi_zeta(simplex, zeta, x), zeta(ratio, lambda * vol) + zeta(ratio, (Scalar(1) - lambda) * vol));
  return r;
}

CheckReport check_limit_j5(const ZetaSpec& zeta, std::size_t n, const Scalar& s, const Scalar& r_, std::size_t steps,
                           double tolerance) {
  if (n < 2) throw DomainError("check_limit_j5: n must be >= 2");
  if (s.sign() <= 0 || r_.sign() <= 0) throw DomainError("check_limit_j5: s and r must be positive");
  CheckReport rep;
  rep.suite = "j5";
  rep.trials = 1;
  const Polytope simplex = standard_simplex(n, n, s);
  const Scalar vol = pow(s, static_cast<unsigned>(n)) / factorial(n);
  const bool exact = zeta.exact();
  auto at = [&](const Scalar& x1) {
    Vector x = zero_vector(n);
    x[0] = x1;
    x[1] = -r_;
    return x;
  };
  const Json base{{"n", n}, {"s", scalar_to_json(s)}, {"r", scalar_to_json(r_)}};

  Json on = base;
  on["x1"] = scalar_to_json(r_);
  double on_point = 0;
  if (exact) {
    const Scalar v = pi_zeta(simplex, zeta, at(r_));
    rep.compare(on, v, zeta(Scalar(0), vol));
    on_point = v.to_double();
  } else {
    on_point = pi_zeta_approx(simplex, zeta, at(r_));
    rep.compare_approx(on, on_point, zeta.approx(0, vol), tolerance);
  }

  for (int side : {-1, 1}) {
    double last = 0;
    Scalar step(1);
    for (std::size_t k = 1; k <= steps; ++k) {
      step *= Scalar(Rational(1, 2));
      const Scalar x1 = r_ + Scalar(side) * r_ * step;
      const Scalar ratio = (x1 - r_) / s;
      Json in = base;
      in["x1"] = scalar_to_json(x1);
      if (exact) {
        const Scalar v = pi_zeta(simplex, zeta, at(x1));
        rep.compare(in, v, zeta(ratio, vol));
        last = v.to_double();
      } else {
        last = pi_zeta_approx(simplex, zeta, at(x1));
        rep.compare_approx(in, last, zeta.approx(ratio.to_double(), vol), tolerance);
      }
    }
    Json lim = base;
    lim["limit"] = side < 0 ? "from below" : "from above";
    const bool keep_exact = rep.exact;
    rep.compare_approx(lim, last, on_point, tolerance);
    rep.exact = keep_exact;
  }
  return rep;
}

// ---------------------------------------------------------------- extraction

namespace {

// Evaluates Z on T, or on the face of T opposite o (the "check" valuation,
// which is 0 on {o}).
struct Prober {
  std::shared_ptr<const BlackBoxValuation> z;
  bool face = false;
  std::size_t n = 0;

  Scalar operator()(const Polytope& t, const Vector& x) const {
    if (!face) return z->eval(t, x);
    std::vector<Vector> rest;
    for (const auto& v : t.vertices())
      if (!is_zero(v)) rest.push_back(v);
    if (rest.empty()) return Scalar(0);
    return z->eval(hull(rest, n), x);
  }
};

struct Recovered {
  Scalar c0;
  Scalar c0_prime;
  Scalar c_nm1;
  UnaryFunction eta_a;
  UnaryFunction eta_b;
};

// eta(t) = n! (probe(S)(x_t) - c0 - c_nm1 V_1(S, [-x_t, x_t])) / w where S is
// a full simplex with one facet off the origin of cone volume w/n!, x_t a
// point with ratio t on that facet.
UnaryFunction eta_oracle(const Prober& probe, const Polytope& simplex, const Vector& zero_probe, const Scalar& c0,
                         const Scalar& c_nm1, const std::string& label) {
  const std::size_t n = probe.n;
  const Scalar nfact = factorial(n);
  return UnaryFunction::oracle(
      [=](const Scalar& t) {
        const Vector x = t.is_zero() ? zero_probe : t * unit_vector(n, n - 1);
        Scalar v = probe(simplex, x) - c0;
        if (!c_nm1.is_zero()) v -= c_nm1 * projection_mixed(simplex, x);
        return nfact * v;
      },
      label);
}

Recovered recover(const Prober& probe, bool quad, CheckReport& report, const std::string& tag) {
  const std::size_t n = probe.n;
  const Vector en = unit_vector(n, n - 1);
  const Vector o = zero_vector(n);
  Recovered out;
  out.c0 = probe(hull({o, unit_vector(n, 0)}, n), en);
  out.c0_prime = probe(hull({o}, n), en) - out.c0;

  const Polytope lower = standard_simplex(n, n - 1);
  auto f = [&](long num, long den) { return probe(lower, Scalar(Rational(num, den)) * en) - out.c0; };
  const Scalar slope = f(1, 1);
  // A classifiable Z is additive and even along t e_n on T^{n-1}.
  report.compare({{"probe", tag + ": f(1)+f(2)=f(3) on T^{n-1}"}}, f(1, 1) + f(2, 1), f(3, 1));
  report.compare({{"probe", tag + ": f(1/2)+f(5/2)=f(3) on T^{n-1}"}}, f(1, 2) + f(5, 2), f(3, 1));
  report.compare({{"probe", tag + ": f(-1)=f(1) on T^{n-1}"}}, f(-1, 1), slope);
  out.c_nm1 = slope * factorial(n) / Scalar(2);

  const Polytope simplex = standard_simplex(n, n);
  Vector zero_probe = unit_vector(n, 0) - unit_vector(n, 1);
  out.eta_a = eta_oracle(probe, simplex, zero_probe, out.c0, out.c_nm1, tag + ".eta_a");
  if (quad) {
    // [o, sqrt2 e_1, e_2, ..., e_n]: its off-origin facet has cone volume sqrt2/n!.
    std::vector<Vector> pts{o, Scalar::sqrt2() * unit_vector(n, 0)};
    for (std::size_t i = 1; i < n; ++i) pts.push_back(unit_vector(n, i));
    const Polytope stretched = hull(pts, n);
    Vector zp = Scalar::sqrt2() * unit_vector(n, 0) - unit_vector(n, 1);
    out.eta_b = eta_oracle(probe, stretched, zp, out.c0, out.c_nm1, tag + ".eta_b");
  }
  return out;
}

std::vector<std::pair<Scalar, Scalar>> sample(const UnaryFunction& f) {
  std::vector<std::pair<Scalar, Scalar>> knots;
  for (long k = -12; k <= 12; ++k) {
    const Scalar t(Rational(k, 4));
    knots.emplace_back(t, f(t));
  }
  return knots;
}

}  // namespace

ExtractionResult extract_classification(const BlackBoxValuation& z, const ExtractionOptions& options) {
  if (options.n < 3) throw DomainError("extract_classification: n must be >= 3");
  ExtractionResult res;
  res.report.suite = "extraction:" + z.name;
  res.report.trials = 1;
  auto shared = std::make_shared<const BlackBoxValuation>(z);
  const Prober direct{shared, false, options.n};
  const Recovered a = recover(direct, options.quad, res.report, "T");

  auto add_tables = [&](const std::string& name, const ZetaSpec& zeta) {
    res.tables.emplace_back(name + ".eta_a", sample(zeta.eta_a()));
    if (options.quad) res.tables.emplace_back(name + ".eta_b", sample(zeta.eta_b()));
  };

  if (options.domain == Domain::origin) {
    res.data.zeta1 = ZetaSpec(a.eta_a, a.eta_b);
    res.data.c0 = a.c0;
    res.data.c0_prime = a.c0_prime;
    res.data.c_nm1 = a.c_nm1;
    add_tables("zeta1", res.data.zeta1);
    return res;
  }

  const Prober check{shared, true, options.n};
  const Recovered b = recover(check, options.quad, res.report, "T'");
  const Scalar c = a.c_nm1 - b.c_nm1;
  res.data.c_nm1 = c;
  res.data.c_nm1_tilde = b.c_nm1;
  res.data.c0 = b.c0;
  res.data.c0_tilde = a.c0 - b.c0;
  res.data.c0_prime = a.c0_prime;
  // zeta2 = f2 - 2c|t|s and zeta1 = f1 - f2 + 2c|t|s; the |t|s term carries
  // sqrt2 times the coefficient into the b-component.
  const Scalar two_c = Scalar(2) * c;
  const UnaryFunction abs_t = UnaryFunction::abs_power(1);
  UnaryFunction z2a = b.eta_a + (-two_c) * abs_t;
  UnaryFunction z1a = a.eta_a + Scalar(-1) * b.eta_a + two_c * abs_t;
  UnaryFunction z2b;
  UnaryFunction z1b;
  if (options.quad) {
    const Scalar two_c_root2 = two_c * Scalar::sqrt2();
    z2b = b.eta_b + (-two_c_root2) * abs_t;
    z1b = a.eta_b + Scalar(-1) * b.eta_b + two_c_root2 * abs_t;
  }
  res.data.zeta1 = ZetaSpec(std::move(z1a), std::move(z1b));
  res.data.zeta2 = ZetaSpec(std::move(z2a), std::move(z2b));
  add_tables("zeta1", res.data.zeta1);
  add_tables("zeta2", res.data.zeta2);
  return res;
}

}  // namespace vallab
