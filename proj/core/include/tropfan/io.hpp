#pragma once

// Text and JSON formats for matrices, fans, polynomials, ray functions and
// morphisms. All readers throw Error(ParseError) on malformed input.

#include "tropfan/evalmap.hpp"
#include "tropfan/morphism.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace tropfan::io {

using Json = nlohmann::ordered_json;

Json load_json(const std::filesystem::path& path);

/// JSON number, or a decimal string for values outside int64.
Json to_json(const Integer& v);
Json to_json(const IntVector& v);
Integer integer_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);

/// {"rows": m, "cols": n, "data": [[...], ...]}; a bare array of rows is also
/// accepted on input.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"ambient_dim": n, "rays": [{"direction": [...], "weight": w}, ...]}.
/// A missing weight means 1.
Json to_json(const WeightedFan& x);
WeightedFan fan_from_json(const Json& j);

/// Ray names in storage order, e.g. ["(-1,-1)", "(0,1)", "(1,0)"].
Json ray_names(const WeightedFan& x);

/// {"rays": [...], "values": [...]} with "-inf" entries for bottom.
Json to_json(const WeightedFan& x, const RayFunction& f);
/// Accepts {"values": [...]} or a bare array; all entries integers or all "-inf".
RayFunction ray_function_from_json(const Json& j, std::size_t num_rays);

/// Names x, y, z when n <= 3, otherwise x1..xn.
std::string variable_name(std::size_t i, std::size_t num_vars);

/// Terms in exponent order joined by " + ", e.g. "3*x + 3*x*y"; "-inf" when
/// empty. A zero coefficient is omitted unless the term is constant.
std::string format_poly(const LaurentPoly& p);

/// Parses "1 + 3*x^1 + 2*y + x^-1*y". Variables are x, y, z or x1, x2, ...;
/// numeric factors in a term add up to its coefficient. When num_vars is
/// absent it is inferred from the highest variable used (at least 1).
LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> num_vars = std::nullopt);

/// {"vars": n, "terms": [{"coeff": "3", "exp": [1, 1]}, ...]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// "1,-2,3/4"
RatVector parse_point(std::string_view text);
Json to_json(const Rational& q);  // always a string: "3", "-1/2"
Json to_json(const RatVector& v);
Json to_json(const TropValue& v);

/// Fans inside morphism and homomorphism files are either inline objects or
/// paths relative to `base_dir`.
WeightedFan fan_ref_from_json(const Json& j, const std::filesystem::path& base_dir);

/// {"source": fan, "target": fan, "matrix": matrix}
FanMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir);
Json to_json(const FanMorphism& mu);

/// {"source": fan, "target": fan, "images": [[one value per target ray], ...]};
/// values follow the target's sorted ray order.
HomSpec homspec_from_json(const Json& j, const std::filesystem::path& base_dir);
Json to_json(const HomSpec& h);

}  // namespace tropfan::io
