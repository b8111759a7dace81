// vallab: evaluate valuations, dump facet data, run property suites and
// extract classification data.
//
// Exit codes: 0 success or all checks passed, 1 property failure, 2 input
// error, 3 domain error.

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "vallab/io.hpp"
#include "vallab/measures.hpp"
#include "vallab/suites.hpp"

using namespace vallab;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;
constexpr int kDomain = 3;

struct Common {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t n = 3;
  std::string scalar_mode = "rational";
  std::string format = "text";
  bool lenient = false;
  bool use_float = false;
};

std::string decimal(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::string csv_field(const std::string& s) {
  return s.find_first_of(",\"") == std::string::npos ? s : "\"" + s + "\"";
}

Json read_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    try {
      return Json::parse(arg);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("inline JSON: ") + e.what());
    }
  }
  return read_json_file(arg);
}

double parse_double(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("not a number: " + s);
}

// Presets linear_t, rational_part, squared_s, abs_power:P, plus_power:P and
// minus_power:P; anything else is a ZetaSpec JSON file or inline object.
ZetaSpec parse_zeta_arg(const std::string& arg) {
  if (arg == "linear_t") return linear_zeta();
  if (arg == "rational_part") return rational_part_zeta();
  if (arg == "squared_s") return squared_s_zeta();
  const auto colon = arg.find(':');
  if (colon != std::string::npos && arg.front() != '{') {
    const std::string kind = arg.substr(0, colon);
    const double p = parse_double(arg.substr(colon + 1));
    if (!(p >= 0)) throw InputError("exponent must be >= 0");
    if (kind == "abs_power") return ZetaSpec::from_eta(UnaryFunction::abs_power(p));
    if (kind == "plus_power") return ZetaSpec::from_eta(UnaryFunction::plus_power(p));
    if (kind == "minus_power") return ZetaSpec::from_eta(UnaryFunction::minus_power(p));
    throw InputError("unknown zeta preset \"" + kind + "\"");
  }
  return parse_zeta_json(read_json_arg(arg));
}

CauchyFunctional parse_xi_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return parse_cauchy_json(read_json_arg(arg));
  return CauchyFunctional::linear(parse_scalar(arg));
}

ScalarMode parse_mode(const std::string& s) {
  if (s == "rational") return ScalarMode::rational;
  if (s == "quad") return ScalarMode::quad;
  throw InputError("scalar mode must be rational or quad");
}

Vector parse_x(const std::string& arg, std::size_t n) {
  Vector x = parse_vector(arg);
  if (x.size() != n)
    throw InputError("--x has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n));
  return x;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int print_tensor(const Common& c, const SymTensor& t, const std::optional<Vector>& x) {
  std::optional<Scalar> value;
  if (x) value = contract(t, *x);
  if (c.format == "json") {
    Json out = tensor_to_json(t);
    if (value) out["contraction"] = scalar_to_json(*value);
    print_json(out);
  } else if (c.format == "csv") {
    std::cout << "index,value" << (c.use_float ? ",approx" : "") << "\n";
    for (const auto& [idx, v] : t.coeffs()) {
      std::string key;
      for (auto i : idx) key += (key.empty() ? "" : " ") + std::to_string(i);
      std::cout << key << "," << to_string(v) << (c.use_float ? "," + decimal(v.to_double()) : "") << "\n";
    }
  } else if (value) {
    std::cout << to_string(*value) << (c.use_float ? "\t" + decimal(value->to_double()) : "") << "\n";
  } else if (t.order() == 1) {
    Vector v;
    for (std::size_t i = 0; i < t.dim(); ++i) v.push_back(t.at({i}));
    std::cout << to_string(v) << "\n";
  } else {
    for (const auto& [idx, v] : t.coeffs()) {
      std::string key;
      for (auto i : idx) key += (key.empty() ? "" : ",") + std::to_string(i);
      std::cout << "[" << key << "]\t" << to_string(v) << "\n";
    }
  }
  return kPass;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string valuation;
  std::string polytope;
  std::string x;
  std::string zeta = "linear_t";
  std::string data;
  std::string form;
  std::size_t p = 1;
  std::string xi = "1";
};

int cmd_eval(const Common& c, const EvalArgs& a) {
  const Polytope poly = parse_polytope_json(read_json_arg(a.polytope));
  const OriginMode mode = c.lenient ? OriginMode::lenient : OriginMode::strict;
  auto need_x = [&] {
    if (a.x.empty()) throw InputError("--x is required for " + a.valuation);
    return parse_x(a.x, poly.ambient_dim());
  };

  std::optional<Scalar> exact;
  std::optional<double> approx;
  if (a.valuation == "pi_zeta" || a.valuation == "pi_zeta_tilde") {
    const ZetaSpec zeta = parse_zeta_arg(a.zeta);
    const Vector x = need_x();
    const Polytope body = a.valuation == "pi_zeta" ? poly : hull_with_origin(poly);
    if (zeta.exact())
      exact = pi_zeta(body, zeta, x, mode);
    else
      approx = pi_zeta_approx(body, zeta, x, mode);
  } else if (a.valuation == "projection") {
    exact = projection_mixed(poly, need_x());
  } else if (a.valuation == "volume") {
    exact = volume(poly);
  } else if (a.valuation == "euler_local") {
    exact = Scalar(euler_local(poly));
  } else if (a.valuation == "euler_hit") {
    exact = Scalar(euler_hit(poly));
  } else if (a.valuation == "theorem11" || a.valuation == "theorem15") {
    if (a.data.empty()) throw InputError("--data is required for " + a.valuation);
    const ClassificationData d = parse_classification_json(read_json_arg(a.data));
    const Vector x = need_x();
    exact = a.valuation == "theorem11" ? z_theorem11(poly, d, x) : z_theorem15(poly, d, x);
  } else if (a.valuation == "homogeneous") {
    if (a.form.empty()) throw InputError("--form is required for homogeneous");
    const HomogeneousForm f = parse_homogeneous_json(read_json_arg(a.form));
    const Vector x = need_x();
    if (f.p == std::floor(f.p))
      exact = z_homogeneous(poly, f, x);
    else
      approx = z_homogeneous_approx(poly, f, x);
  } else if (a.valuation == "m0p") {
    const SymTensor t = m0p(poly, parse_xi_arg(a.xi), a.p);
    return print_tensor(c, t, a.x.empty() ? std::nullopt : std::optional<Vector>(need_x()));
  } else {
    throw InputError("unknown valuation \"" + a.valuation + "\"");
  }

  const bool with_float = approx || c.use_float;
  const std::string exact_text = exact ? to_string(*exact) : "";
  const std::string float_text = approx ? decimal(*approx) : (c.use_float ? decimal(exact->to_double()) : "");
  if (c.format == "json") {
    Json out{{"valuation", a.valuation}, {"exact", exact.has_value()}};
    if (exact) out["value"] = scalar_to_json(*exact);
    if (with_float) out["approx"] = approx ? *approx : exact->to_double();
    print_json(out);
  } else if (c.format == "csv") {
    std::cout << "valuation,value" << (with_float ? ",approx" : "") << "\n";
    std::cout << a.valuation << "," << exact_text << (with_float ? "," + float_text : "") << "\n";
  } else if (exact) {
    std::cout << exact_text << (c.use_float ? "\t" + float_text : "") << "\n";
  } else {
    std::cout << float_text << "\n";
  }
  return kPass;
}

// ---------------------------------------------------------------- facets, measure, tensor

int cmd_facets(const Common& c, const std::string& path) {
  const Polytope poly = parse_polytope_json(read_json_arg(path));
  if (c.format == "json") {
    Json rows = Json::array();
    for (const auto& f : poly.facets()) {
      Json row{{"normal", vector_to_json(f.normal)},
               {"support", scalar_to_json(f.support)},
               {"in_N_o", !f.support.is_zero()},
               {"normalized_area", scalar_to_json(f.normalized_area)},
               {"cone_volume", scalar_to_json(f.cone_volume)}};
      if (c.use_float) row["area"] = f.area();
      rows.push_back(row);
    }
    print_json(Json{{"dim", poly.dim()}, {"facets", rows}});
    return kPass;
  }
  const char sep = c.format == "csv" ? ',' : '\t';
  auto cell = [&](const std::string& s) { return c.format == "csv" ? csv_field(s) : s; };
  std::cout << "normal" << sep << "support" << sep << "in_N_o" << sep << "normalized_area" << sep << "cone_volume"
            << (c.use_float ? std::string(1, sep) + "area" : "") << "\n";
  for (const auto& f : poly.facets()) {
    std::cout << cell(to_string(f.normal)) << sep << to_string(f.support) << sep << (f.support.is_zero() ? 0 : 1)
              << sep << to_string(f.normalized_area) << sep << to_string(f.cone_volume);
    if (c.use_float) std::cout << sep << decimal(f.area());
    std::cout << "\n";
  }
  return kPass;
}

int cmd_measure(const Common& c, const std::string& path, const std::string& kind) {
  const Polytope poly = parse_polytope_json(read_json_arg(path));
  DiscreteNormalMeasure m;
  if (kind == "cone_volume")
    m = cone_volume_measure(poly);
  else if (kind == "surface_area")
    m = surface_area_measure(poly);
  else
    throw InputError("measure kind must be cone_volume or surface_area");
  if (c.format == "json") {
    Json out = measure_to_json(m);
    out["total"] = scalar_to_json(m.total());
    print_json(out);
    return kPass;
  }
  const char sep = c.format == "csv" ? ',' : '\t';
  auto cell = [&](const std::string& s) { return c.format == "csv" ? csv_field(s) : s; };
  std::cout << "normal" << sep << "weight" << (c.use_float ? std::string(1, sep) + "approx" : "") << "\n";
  for (const auto& [u, w] : m.atoms)
    std::cout << cell(to_string(u)) << sep << to_string(w) << (c.use_float ? sep + decimal(w.to_double()) : "") << "\n";
  return kPass;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string suite;
  std::string zeta;
  std::size_t xs = 5;
};

CheckReport run_suite(const Common& c, const CheckArgs& a) {
  SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.n = c.n;
  cfg.mode = parse_mode(c.scalar_mode);
  cfg.xs_per_trial = a.xs;
  if (cfg.n < 2) throw InputError("--n must be at least 2");

  std::optional<ZetaSpec> zeta;
  if (!a.zeta.empty()) zeta = parse_zeta_arg(a.zeta);
  if (zeta && !zeta->exact() && a.suite != "j5")
    throw DomainError("suite " + a.suite + " needs an exactly evaluable zeta; float zeta are checked by j5");
  // With --zeta the suites check Pi_zeta alone and run no control.
  auto valuations = [&](bool simple) {
    if (zeta) return std::vector<BlackBoxValuation>{pi_zeta_valuation("pi_zeta[" + a.zeta + "]", *zeta)};
    return simple ? simple_valuations(cfg.mode) : standard_valuations(cfg.mode);
  };
  auto zetas = [&](std::vector<ZetaSpec> defaults) { return zeta ? std::vector<ZetaSpec>{*zeta} : defaults; };

  if (a.suite == "valuation")
    return run_valuation_suite(valuations(false), cfg, zeta ? std::nullopt : std::optional(squared_s_control()));
  if (a.suite == "contravariance")
    return run_contravariance_suite(valuations(false), cfg, zeta ? std::nullopt : std::optional(support_control()));
  if (a.suite == "simplicity") return run_simplicity_suite(valuations(true), cfg);
  if (a.suite == "k1")
    return run_k1_suite(zetas({linear_zeta(), abs_power_zeta(1), abs_power_zeta(2), abs_power_zeta(3)}), cfg);
  if (a.suite == "dissection") return run_dissection_suite(zeta.value_or(abs_power_zeta(2)), cfg);
  if (a.suite == "j5")
    return run_limit_suite(zetas({linear_zeta(), abs_power_zeta(1), abs_power_zeta(3),
                                  ZetaSpec::from_eta(UnaryFunction::plus_power(1)),
                                  ZetaSpec::from_eta(UnaryFunction::abs_power(0.5))}),
                           cfg);
  if (a.suite == "projection") return run_projection_suite(cfg);
  if (a.suite == "tensor") return run_tensor_suite(cfg);
  if (a.suite == "extraction") return run_extraction_suite(cfg);
  throw InputError("unknown suite \"" + a.suite + "\"");
}

int cmd_check(const Common& c, const CheckArgs& a) {
  const CheckReport r = run_suite(c, a);
  if (c.format == "json") {
    print_json(r.to_json());
  } else if (c.format == "csv") {
    std::cout << "suite,seed,trials,checks,skipped,failed,control,passed\n"
              << r.suite << "," << r.seed << "," << r.trials << "," << r.checks << "," << r.skipped << "," << r.failed
              << "," << (r.control_caught ? (*r.control_caught ? "caught" : "missed") : "none") << ","
              << (r.passed() ? 1 : 0) << "\n";
  } else {
    std::cout << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (seed " << r.seed << ", " << r.trials
              << " trials, " << r.checks << " checks, " << r.skipped << " skipped, " << r.failed << " failed";
    if (!r.exact) std::cout << ", max relative error " << r.max_error;
    std::cout << ")\n";
    if (r.control_caught)
      std::cout << "control: " << (*r.control_caught ? "caught" : "NOT caught, the suite cannot detect failures")
                << "\n";
    for (const auto& f : r.failures)
      std::cout << "witness: " << f.inputs.dump() << "\n  lhs = " << f.lhs << "\n  rhs = " << f.rhs << "\n";
  }
  return r.passed() ? kPass : kFail;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
  std::string data;
  std::string zeta;
  std::string domain = "origin";
};

int cmd_extract(const Common& c, const ExtractArgs& a) {
  ExtractionOptions opt;
  opt.n = c.n;
  opt.quad = parse_mode(c.scalar_mode) == ScalarMode::quad;
  if (a.domain == "origin")
    opt.domain = Domain::origin;
  else if (a.domain == "all")
    opt.domain = Domain::all;
  else
    throw InputError("--domain must be origin or all");
  if (opt.n < 2) throw InputError("--n must be at least 2");

  BlackBoxValuation z;
  if (!a.data.empty()) {
    const ClassificationData d = parse_classification_json(read_json_arg(a.data));
    z = opt.domain == Domain::origin ? theorem11_valuation("theorem11", d) : theorem15_valuation("theorem15", d);
  } else if (!a.zeta.empty()) {
    z = pi_zeta_valuation("pi_zeta", parse_zeta_arg(a.zeta));
  } else {
    throw InputError("extract needs --data or --zeta");
  }

  SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.trials = c.trials;
  cfg.n = c.n;
  cfg.mode = opt.quad ? ScalarMode::quad : ScalarMode::rational;
  ExtractionResult res;
  const CheckReport r = run_round_trip(z, opt, cfg, &res);

  if (c.format == "csv") {
    std::cout << "component,t,value" << (c.use_float ? ",approx" : "") << "\n";
    for (const auto& [name, table] : res.tables)
      for (const auto& [t, v] : table)
        std::cout << name << "," << to_string(t) << "," << to_string(v)
                  << (c.use_float ? "," + decimal(v.to_double()) : "") << "\n";
  } else {
    Json tables = Json::object();
    for (const auto& [name, table] : res.tables) {
      Json rows = Json::array();
      for (const auto& [t, v] : table) rows.push_back({scalar_to_json(t), scalar_to_json(v)});
      tables[name] = rows;
    }
    Json data = classification_to_json(res.data);
    // The recovered zeta queries the black box; report its tables instead.
    for (const char* key : {"zeta1", "zeta2"}) data.erase(key);
    print_json(Json{{"constants", data}, {"tables", tables}, {"round_trip", r.to_json()}});
  }
  return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact SL(n)-contravariant polytope valuations and their property checks."};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--seed", c.seed, "Random seed (VALLAB_SEED overrides)")->capture_default_str();
  app.add_option("--trials", c.trials, "Trials per suite")->capture_default_str();
  app.add_option("--n", c.n, "Ambient dimension for suites and extraction")->capture_default_str();
  app.add_option("--scalar-mode", c.scalar_mode, "rational or quad")
      ->check(CLI::IsMember({"rational", "quad"}))
      ->capture_default_str();
  app.add_option("--format", c.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--lenient", c.lenient, "Evaluate at x = o instead of rejecting it");
  app.add_flag("--float", c.use_float, "Add decimal columns");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a valuation on a polytope");
  eval->add_option("--valuation", ea.valuation,
                   "pi_zeta, pi_zeta_tilde, projection, volume, euler_local, euler_hit, theorem11, theorem15, "
                   "homogeneous or m0p")
      ->required();
  eval->add_option("--polytope", ea.polytope, "Polytope JSON file or inline object")->required();
  eval->add_option("--x", ea.x, "Evaluation point, e.g. \"0,0,1\"");
  eval->add_option("--zeta", ea.zeta, "Zeta preset or JSON")->capture_default_str();
  eval->add_option("--data", ea.data, "Classification constants JSON");
  eval->add_option("--form", ea.form, "Homogeneous form JSON");
  eval->add_option("--p", ea.p, "Tensor order for m0p")->capture_default_str();
  eval->add_option("--xi", ea.xi, "Cauchy functional for m0p: a scalar or {\"alpha\",\"beta\"}")
      ->capture_default_str();

  std::string facet_path;
  auto* facets = app.add_subcommand("facets", "List facets with supports and cone volumes");
  facets->add_option("polytope", facet_path, "Polytope JSON file or inline object")->required();

  std::string measure_path;
  std::string measure_kind = "cone_volume";
  auto* measure = app.add_subcommand("measure", "Cone-volume or surface-area measure");
  measure->add_option("polytope", measure_path, "Polytope JSON file or inline object")->required();
  measure->add_option("--kind", measure_kind, "cone_volume or surface_area")->capture_default_str();

  EvalArgs ta;
  auto* tensor = app.add_subcommand("tensor", "The tensor valuation M^{0,p}");
  tensor->add_option("polytope", ta.polytope, "Polytope JSON file or inline object")->required();
  tensor->add_option("--p", ta.p, "Order")->capture_default_str();
  tensor->add_option("--xi", ta.xi, "Cauchy functional: a scalar or {\"alpha\",\"beta\"}")->capture_default_str();
  tensor->add_option("--x", ta.x, "Contract against x^p");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run a property suite");
  check->add_option("--suite", ca.suite,
                    "valuation, contravariance, simplicity, dissection, k1, j5, projection, tensor or extraction")
      ->required();
  check->add_option("--zeta", ca.zeta, "Check Pi_zeta for this zeta only");
  check->add_option("--xs", ca.xs, "Sample points per trial")->capture_default_str();

  ExtractArgs xa;
  auto* extract = app.add_subcommand("extract", "Recover classification constants from a valuation");
  extract->add_option("--data", xa.data, "Constants of the valuation to probe");
  extract->add_option("--zeta", xa.zeta, "Probe Pi_zeta for this zeta");
  extract->add_option("--domain", xa.domain, "origin or all")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (const char* env = std::getenv("VALLAB_SEED")) {
      try {
        std::size_t used = 0;
        c.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw InputError(std::string("VALLAB_SEED is not an unsigned integer: ") + env);
      }
    }
    if (*eval) return cmd_eval(c, ea);
    if (*facets) return cmd_facets(c, facet_path);
    if (*measure) return cmd_measure(c, measure_path, measure_kind);
    if (*tensor) {
      const Polytope poly = parse_polytope_json(read_json_arg(ta.polytope));
      const SymTensor t = m0p(poly, parse_xi_arg(ta.xi), ta.p);
      return print_tensor(c, t, ta.x.empty() ? std::nullopt : std::optional(parse_x(ta.x, poly.ambient_dim())));
    }
    if (*check) return cmd_check(c, ca);
    if (*extract) return cmd_extract(c, xa);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
  return kInput;
}
