#pragma once

#include <string>

#include <json.hpp>

#include "vallab/measures.hpp"
#include "vallab/tensors.hpp"
#include "vallab/valuations.hpp"
#include "vallab/zeta.hpp"

namespace vallab {

using Json = nlohmann::json;

// Serialization for the public JSON formats. Every parse_* function throws
// InputError on malformed input.

/// Rationals as "p/q"; elements with a sqrt2 part as {"a": "p/q", "b": "p/q"}.
/// With force_object, rationals also use the object form.
Json scalar_to_json(const Scalar& x, bool force_object = false);
/// Accepts a string, an integer, or an {"a","b"} object.
Scalar parse_scalar_json(const Json& j);

Json vector_to_json(const Vector& v, bool force_object = false);
Vector parse_vector_json(const Json& j);

/// {"n": 3, "scalar": "rational"|"quad", "vertices": [[...], ...]}
Json polytope_to_json(const Polytope& p);
/// The vertices are hulled, so redundant points are accepted.
Polytope parse_polytope_json(const Json& j);

/// {"kind": "cone_volume"|"normalized_area", "atoms": [{"normal": [...], "weight": "1/6"}]}
Json measure_to_json(const DiscreteNormalMeasure& m);

/**
 * Unary functions:
 *   {"kind": "zero"}
 *   {"kind": "poly", "coeffs": ["0", "1"]}
 *   {"kind": "abs_power" | "plus_power" | "minus_power", "p": 2, "coeff": "1"}
 *   {"kind": "table", "knots": [["-1", "2"], ["0", "0"], ...]}
 *   {"kind": "sum", "terms": [...]}
 * Oracle terms serialize as {"kind": "oracle", "label": ...} and cannot be
 * parsed back.
 */
Json unary_to_json(const UnaryFunction& f);
UnaryFunction parse_unary_json(const Json& j);

/// {"eta_a": <unary>, "eta_b": <unary>}; a missing eta_b means zero.
Json zeta_to_json(const ZetaSpec& z);
ZetaSpec parse_zeta_json(const Json& j);

/// {"zeta1", "zeta2", "c_nm1", "c_nm1_tilde", "c0", "c0_prime", "c0_tilde"};
/// every field is optional and defaults to zero.
Json classification_to_json(const ClassificationData& d);
ClassificationData parse_classification_json(const Json& j);

/// {"p": 2, "n": 3, "coeffs": [{"idx": [0, 0], "v": "1/6"}, ...]}
/// A scalar c means the R-linear map x -> c x; {"alpha", "beta"} gives
/// a + b sqrt2 -> alpha a + beta b.
Json cauchy_to_json(const CauchyFunctional& xi);
CauchyFunctional parse_cauchy_json(const Json& j);
/// {"p", "xi1", "xi2", "xi3", "c0", "c0_prime", "c_nm1"}, all but p optional.
HomogeneousForm parse_homogeneous_json(const Json& j);

Json tensor_to_json(const SymTensor& t);
SymTensor parse_tensor_json(const Json& j);

/// Reads and parses a JSON file (InputError when missing or malformed).
Json read_json_file(const std::string& path);

}  // namespace vallab
