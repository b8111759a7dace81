#include "vallab/io.hpp"

#include <fstream>
#include <sstream>

namespace vallab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t parse_size(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

double parse_exponent(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    return q.convert_to<double>();
  }
  throw InputError("exponent must be a number");
}

const char* kind_name(UnaryFunction::Kind k) {
  switch (k) {
    case UnaryFunction::Kind::power: return "power";
    case UnaryFunction::Kind::abs_power: return "abs_power";
    case UnaryFunction::Kind::plus_power: return "plus_power";
    case UnaryFunction::Kind::minus_power: return "minus_power";
    case UnaryFunction::Kind::table: return "table";
    case UnaryFunction::Kind::oracle: return "oracle";
  }
  return "?";
}

Json term_to_json(const UnaryFunction::Term& t) {
  Json j;
  j["kind"] = kind_name(t.kind);
  j["coeff"] = scalar_to_json(t.coeff);
  switch (t.kind) {
    case UnaryFunction::Kind::table: {
      Json knots = Json::array();
      for (const auto& [x, y] : t.knots) knots.push_back({scalar_to_json(x), scalar_to_json(y)});
      j["knots"] = knots;
      break;
    }
    case UnaryFunction::Kind::oracle:
      j["label"] = t.label;
      break;
    default:
      j["p"] = t.exponent;
  }
  return j;
}

}  // namespace

Json scalar_to_json(const Scalar& x, bool force_object) {
  if (x.is_rational() && !force_object) return to_string(x.a());
  return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}};
}

Scalar parse_scalar_json(const Json& j) {
  try {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
    if (j.is_object()) {
      const Rational a = parse_rational(field(j, "a").get<std::string>());
      const Rational b = j.contains("b") ? parse_rational(j.at("b").get<std::string>()) : Rational(0);
      return {a, b};
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed scalar: ") + e.what());
  }
  throw InputError("scalar must be a string \"p/q\", an integer, or an {\"a\",\"b\"} object");
}

Json vector_to_json(const Vector& v, bool force_object) {
  Json j = Json::array();
  for (const auto& c : v) j.push_back(scalar_to_json(c, force_object));
  return j;
}

Vector parse_vector_json(const Json& j) {
  if (j.is_string()) return parse_vector(j.get<std::string>());
  if (!j.is_array()) throw InputError("vector must be an array of scalars");
  Vector v;
  for (const auto& c : j) v.push_back(parse_scalar_json(c));
  return v;
}

Json polytope_to_json(const Polytope& p) {
  bool quad = false;
  for (const auto& v : p.vertices())
    for (const auto& c : v) quad = quad || !c.is_rational();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_to_json(v, quad));
  return Json{{"n", p.ambient_dim()}, {"scalar", quad ? "quad" : "rational"}, {"vertices", verts}};
}

Polytope parse_polytope_json(const Json& j) {
  const std::size_t n = parse_size(field(j, "n"), "n");
  if (n == 0) throw InputError("n must be positive");
  if (j.contains("scalar")) {
    const auto& mode = j.at("scalar");
    if (!mode.is_string() || (mode != "rational" && mode != "quad"))
      throw InputError("scalar must be \"rational\" or \"quad\"");
  }
  const Json& verts = field(j, "vertices");
  if (!verts.is_array()) throw InputError("vertices must be an array");
  std::vector<Vector> pts;
  for (const auto& v : verts) {
    Vector x = parse_vector_json(v);
    if (x.size() != n) throw InputError("vertex has " + std::to_string(x.size()) + " coordinates, expected " + std::to_string(n));
    if (j.value("scalar", "rational") == "rational")
      for (const auto& c : x)
        if (!c.is_rational()) throw InputError("sqrt2 coordinate in a rational polytope; set \"scalar\": \"quad\"");
    pts.push_back(std::move(x));
  }
  return hull(pts, n);
}

Json measure_to_json(const DiscreteNormalMeasure& m) {
  Json atoms = Json::array();
  for (const auto& [u, w] : m.atoms) atoms.push_back({{"normal", vector_to_json(u)}, {"weight", scalar_to_json(w)}});
  return Json{{"kind", m.kind == MeasureKind::cone_volume ? "cone_volume" : "normalized_area"}, {"atoms", atoms}};
}

Json unary_to_json(const UnaryFunction& f) {
  if (f.is_zero()) return Json{{"kind", "zero"}};
  // Pure polynomials use the compact form.
  bool poly = true;
  double top = 0;
  for (const auto& t : f.terms()) {
    poly = poly && t.kind == UnaryFunction::Kind::power;
    top = std::max(top, t.exponent);
  }
  if (poly) {
    std::vector<Scalar> coeffs(static_cast<std::size_t>(top) + 1, Scalar(0));
    for (const auto& t : f.terms()) coeffs[static_cast<std::size_t>(t.exponent)] += t.coeff;
    Json c = Json::array();
    for (const auto& x : coeffs) c.push_back(scalar_to_json(x));
    return Json{{"kind", "poly"}, {"coeffs", c}};
  }
  if (f.terms().size() == 1) return term_to_json(f.terms().front());
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(term_to_json(t));
  return Json{{"kind", "sum"}, {"terms", terms}};
}

UnaryFunction parse_unary_json(const Json& j) {
  try {
    const std::string kind = field(j, "kind").get<std::string>();
    const Scalar coeff = j.contains("coeff") ? parse_scalar_json(j.at("coeff")) : Scalar(1);
    UnaryFunction f;
    if (kind == "zero") return f;
    if (kind == "poly") {
      std::vector<Scalar> coeffs;
      for (const auto& c : field(j, "coeffs")) coeffs.push_back(parse_scalar_json(c));
      f = UnaryFunction::polynomial(coeffs);
    } else if (kind == "power") {
      const double p = parse_exponent(field(j, "p"));
      if (!(p >= 0) || std::floor(p) != p) throw InputError("power needs an integer exponent >= 0");
      std::vector<Scalar> coeffs(static_cast<std::size_t>(p) + 1, Scalar(0));
      coeffs.back() = Scalar(1);
      f = UnaryFunction::polynomial(coeffs);
    } else if (kind == "abs_power") {
      f = UnaryFunction::abs_power(parse_exponent(field(j, "p")));
    } else if (kind == "plus_power") {
      f = UnaryFunction::plus_power(parse_exponent(field(j, "p")));
    } else if (kind == "minus_power") {
      f = UnaryFunction::minus_power(parse_exponent(field(j, "p")));
    } else if (kind == "table") {
      std::vector<std::pair<Scalar, Scalar>> knots;
      for (const auto& k : field(j, "knots")) {
        if (!k.is_array() || k.size() != 2) throw InputError("table knots must be [t, value] pairs");
        knots.emplace_back(parse_scalar_json(k[0]), parse_scalar_json(k[1]));
      }
      f = UnaryFunction::table(std::move(knots));
    } else if (kind == "sum") {
      for (const auto& t : field(j, "terms")) f = f + parse_unary_json(t);
    } else if (kind == "oracle") {
      throw InputError("oracle functions cannot be read from JSON");
    } else {
      throw InputError("unknown function kind \"" + kind + "\"");
    }
    return coeff * f;
  } catch (const DomainError& e) {
    throw InputError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed function: ") + e.what());
  }
}

Json zeta_to_json(const ZetaSpec& z) {
  if (!z.additive()) return Json{{"kind", "non_additive"}, {"label", z.label()}};
  return Json{{"eta_a", unary_to_json(z.eta_a())}, {"eta_b", unary_to_json(z.eta_b())}};
}

ZetaSpec parse_zeta_json(const Json& j) {
  if (!j.is_object()) throw InputError("zeta must be an object");
  UnaryFunction a = j.contains("eta_a") ? parse_unary_json(j.at("eta_a")) : UnaryFunction();
  UnaryFunction b = j.contains("eta_b") ? parse_unary_json(j.at("eta_b")) : UnaryFunction();
  if (j.contains("eta")) {
    if (j.contains("eta_a") || j.contains("eta_b")) throw InputError("give either eta or eta_a/eta_b");
    return ZetaSpec::from_eta(parse_unary_json(j.at("eta")));
  }
  return {std::move(a), std::move(b)};
}

Json classification_to_json(const ClassificationData& d) {
  return Json{{"zeta1", zeta_to_json(d.zeta1)},
              {"zeta2", zeta_to_json(d.zeta2)},
              {"c_nm1", scalar_to_json(d.c_nm1)},
              {"c_nm1_tilde", scalar_to_json(d.c_nm1_tilde)},
              {"c0", scalar_to_json(d.c0)},
              {"c0_prime", scalar_to_json(d.c0_prime)},
              {"c0_tilde", scalar_to_json(d.c0_tilde)}};
}

ClassificationData parse_classification_json(const Json& j) {
  if (!j.is_object()) throw InputError("classification data must be an object");
  ClassificationData d;
  if (j.contains("zeta1")) d.zeta1 = parse_zeta_json(j.at("zeta1"));
  if (j.contains("zeta")) d.zeta1 = parse_zeta_json(j.at("zeta"));
  if (j.contains("zeta2")) d.zeta2 = parse_zeta_json(j.at("zeta2"));
  auto get = [&](const char* key, Scalar& out) {
    if (j.contains(key)) out = parse_scalar_json(j.at(key));
  };
  get("c_nm1", d.c_nm1);
  get("c_nm1_tilde", d.c_nm1_tilde);
  get("c0", d.c0);
  get("c0_prime", d.c0_prime);
  get("c0_tilde", d.c0_tilde);
  return d;
}

Json cauchy_to_json(const CauchyFunctional& xi) {
  return Json{{"alpha", scalar_to_json(xi.alpha)}, {"beta", scalar_to_json(xi.beta)}};
}

CauchyFunctional parse_cauchy_json(const Json& j) {
  if (j.is_object() && j.contains("alpha")) {
    const Scalar beta = j.contains("beta") ? parse_scalar_json(j.at("beta")) : Scalar(0);
    return {parse_scalar_json(j.at("alpha")), beta};
  }
  return CauchyFunctional::linear(parse_scalar_json(j));
}

HomogeneousForm parse_homogeneous_json(const Json& j) {
  if (!j.is_object()) throw InputError("homogeneous form must be an object");
  HomogeneousForm f;
  f.p = parse_exponent(field(j, "p"));
  if (!(f.p >= 0)) throw InputError("homogeneous degree must be >= 0");
  if (j.contains("xi1")) f.xi1 = parse_cauchy_json(j.at("xi1"));
  if (j.contains("xi2")) f.xi2 = parse_cauchy_json(j.at("xi2"));
  if (j.contains("xi3")) f.xi3 = parse_cauchy_json(j.at("xi3"));
  if (j.contains("c0")) f.c0 = parse_scalar_json(j.at("c0"));
  if (j.contains("c0_prime")) f.c0_prime = parse_scalar_json(j.at("c0_prime"));
  if (j.contains("c_nm1")) f.c_nm1 = parse_scalar_json(j.at("c_nm1"));
  return f;
}

Json tensor_to_json(const SymTensor& t) {
  Json coeffs = Json::array();
  for (const auto& [idx, v] : t.coeffs()) coeffs.push_back({{"idx", idx}, {"v", scalar_to_json(v)}});
  return Json{{"p", t.order()}, {"n", t.dim()}, {"coeffs", coeffs}};
}

SymTensor parse_tensor_json(const Json& j) {
  try {
    SymTensor t(parse_size(field(j, "p"), "p"), parse_size(field(j, "n"), "n"));
    for (const auto& c : field(j, "coeffs")) {
      MultiIndex idx;
      for (const auto& i : field(c, "idx")) idx.push_back(parse_size(i, "index"));
      t.add(std::move(idx), parse_scalar_json(field(c, "v")));
    }
    return t;
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace vallab
