#include "tropfan/io.hpp"

#include "tropfan/error.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>

namespace tropfan::io {

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

// Runs a reader, turning JSON type/key errors into ParseError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot read '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_fail("'" + path.string() + "': " + e.what());
  }
}

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return to_string(v);
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  parse_fail("expected an integer, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of integers, got " + j.dump());
  IntVector v;
  for (const Json& x : j) v.push_back(integer_from_json(x));
  return v;
}

Json to_json(const IntMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(to_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const Json& data = j.is_object() ? j.at("data") : j;
    if (!data.is_array() || data.empty()) parse_fail("matrix needs a non-empty array of rows");
    std::vector<IntVector> rows;
    for (const Json& r : data) rows.push_back(int_vector_from_json(r));
    const std::size_t cols = rows.front().size();
    if (cols == 0) parse_fail("matrix rows must be non-empty");
    for (const IntVector& r : rows) {
      if (r.size() != cols) parse_fail("matrix rows have different lengths");
    }
    if (j.is_object()) {
      if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows.size()) {
        parse_fail("matrix 'rows' does not match data");
      }
      if (j.contains("cols") && j.at("cols").get<std::size_t>() != cols) {
        parse_fail("matrix 'cols' does not match data");
      }
    }
    return IntMatrix::from_rows(rows);
  });
}

Json to_json(const WeightedFan& x) {
  Json rays = Json::array();
  for (const Ray& r : x.rays()) {
    rays.push_back(Json{{"direction", to_json(r.direction)}, {"weight", to_json(r.weight)}});
  }
  return Json{{"ambient_dim", x.ambient_dim()}, {"rays", std::move(rays)}};
}

WeightedFan fan_from_json(const Json& j) {
  return guarded("fan", [&] {
    const std::size_t n = j.at("ambient_dim").get<std::size_t>();
    std::vector<Ray> rays;
    for (const Json& r : j.at("rays")) {
      Integer w = r.contains("weight") ? integer_from_json(r.at("weight")) : Integer(1);
      rays.push_back(Ray{int_vector_from_json(r.at("direction")), std::move(w)});
    }
    return WeightedFan::make(n, rays);
  });
}

Json ray_names(const WeightedFan& x) {
  Json names = Json::array();
  for (const Ray& r : x.rays()) names.push_back(ray_name(r));
  return names;
}

Json to_json(const WeightedFan& x, const RayFunction& f) {
  Json values = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    values.push_back(f.is_bottom() ? Json("-inf") : to_json(f[i]));
  }
  return Json{{"rays", ray_names(x)}, {"values", std::move(values)}};
}

RayFunction ray_function_from_json(const Json& j, std::size_t num_rays) {
  return guarded("ray function", [&] {
    const Json& values = j.is_object() ? j.at("values") : j;
    if (!values.is_array()) parse_fail("ray function values must be an array");
    if (values.size() != num_rays) {
      throw Error(ErrorCode::DimensionMismatch, "ray function has " + std::to_string(values.size()) +
                                                    " values, fan has " + std::to_string(num_rays) +
                                                    " rays");
    }
    std::size_t bottoms = 0;
    for (const Json& v : values) bottoms += v.is_string() && v.get<std::string>() == "-inf";
    if (bottoms == num_rays && num_rays > 0) return RayFunction::bottom(num_rays);
    if (bottoms != 0) parse_fail("ray function mixes -inf with finite values");
    return RayFunction(int_vector_from_json(values));
  });
}

std::string variable_name(std::size_t i, std::size_t num_vars) {
  if (num_vars <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

std::string format_poly(const LaurentPoly& p) {
  if (p.is_bottom()) return "-inf";
  std::string out;
  for (const auto& [u, a] : p.terms()) {
    std::vector<std::string> factors;
    const bool constant = is_zero(u);
    if (a != 0 || constant) factors.push_back(to_string(a));
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      std::string f = variable_name(i, p.num_vars());
      if (u[i] != 1) f += "^" + to_string(u[i]);
      factors.push_back(std::move(f));
    }
    if (!out.empty()) out += " + ";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) out += "*";
      out += factors[k];
    }
  }
  return out;
}

namespace {

// 0-based variable index for x, y, z, x1, x2, ...
std::size_t variable_index(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 1;
  if (name == "z") return 2;
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t k = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) parse_fail("unknown variable '" + std::string(name) + "'");
      k = k * 10 + static_cast<std::size_t>(c - '0');
      if (k > 1000000) parse_fail("variable index too large in '" + std::string(name) + "'");
    }
    if (k == 0) parse_fail("variables are numbered from x1");
    return k - 1;
  }
  parse_fail("unknown variable '" + std::string(name) + "'");
}

struct ParsedTerm {
  std::map<std::size_t, Integer> exps;
  Rational coeff = 0;
};

ParsedTerm parse_term(std::string_view text) {
  ParsedTerm term;
  for (std::string_view raw : split(text, '*')) {
    std::string_view f = trim(raw);
    if (f.empty()) parse_fail("empty factor in term '" + std::string(trim(text)) + "'");
    if (std::isalpha(static_cast<unsigned char>(f.front()))) {
      std::string_view name = f;
      Integer e = 1;
      if (auto caret = f.find('^'); caret != std::string_view::npos) {
        name = trim(f.substr(0, caret));
        std::string_view exp = trim(f.substr(caret + 1));
        if (exp.size() >= 2 && exp.front() == '(' && exp.back() == ')') exp = exp.substr(1, exp.size() - 2);
        e = parse_integer(exp);
      }
      term.exps[variable_index(name)] += e;
    } else {
      term.coeff += parse_rational(f);
    }
  }
  return term;
}

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::optional<std::size_t> num_vars) {
  std::string_view body = trim(text);
  if (body.empty()) parse_fail("empty polynomial");
  std::vector<ParsedTerm> terms;
  std::size_t needed = 1;
  for (std::string_view raw : split(body, '+')) {
    std::string_view t = trim(raw);
    if (t.empty()) parse_fail("empty term in '" + std::string(body) + "'");
    if (t == "-inf") continue;
    ParsedTerm term = parse_term(t);
    if (!term.exps.empty()) needed = std::max(needed, term.exps.rbegin()->first + 1);
    terms.push_back(std::move(term));
  }
  const std::size_t n = num_vars.value_or(needed);
  if (needed > std::max<std::size_t>(n, 1)) {
    throw Error(ErrorCode::DimensionMismatch, "polynomial uses variable " + std::to_string(needed) +
                                                  " but only " + std::to_string(n) + " are available");
  }
  LaurentPoly p(n);
  for (ParsedTerm& t : terms) {
    Exponent u(n);
    for (auto& [i, e] : t.exps) u[i] = std::move(e);
    p.add_term(std::move(u), std::move(t.coeff));
  }
  return p;
}

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [u, a] : p.terms()) terms.push_back(Json{{"coeff", to_string(a)}, {"exp", to_json(u)}});
  return Json{{"vars", p.num_vars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    const std::size_t n = j.at("vars").get<std::size_t>();
    LaurentPoly p(n);
    for (const Json& t : j.at("terms")) {
      Rational a = 0;
      if (t.contains("coeff")) {
        const Json& c = t.at("coeff");
        if (c.is_string()) {
          if (c.get<std::string>() == "-inf") continue;
          a = parse_rational(c.get<std::string>());
        } else if (c.is_number_integer()) {
          a = Rational(c.get<std::int64_t>());
        } else {
          parse_fail("coefficient must be an integer or a string, got " + c.dump());
        }
      }
      IntVector u = int_vector_from_json(t.at("exp"));
      if (u.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "exponent " + t.at("exp").dump() + " is not of length " +
                                                      std::to_string(n));
      }
      p.add_term(std::move(u), std::move(a));
    }
    return p;
  });
}

RatVector parse_point(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() >= 2 && (body.front() == '(' || body.front() == '[')) body = body.substr(1, body.size() - 2);
  if (trim(body).empty()) parse_fail("empty point");
  RatVector p;
  for (std::string_view part : split(body, ',')) p.push_back(parse_rational(part));
  return p;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const TropValue& v) { return v.is_bottom() ? Json("-inf") : to_json(v.value()); }

WeightedFan fan_ref_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return fan_from_json(load_json(p));
  }
  return fan_from_json(j);
}

FanMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return guarded("morphism", [&] {
    WeightedFan source = fan_ref_from_json(j.at("source"), base_dir);
    WeightedFan target = fan_ref_from_json(j.at("target"), base_dir);
    return FanMorphism::make(std::move(source), std::move(target), matrix_from_json(j.at("matrix")));
  });
}

Json to_json(const FanMorphism& mu) {
  return Json{{"source", to_json(mu.source())},
              {"target", to_json(mu.target())},
              {"matrix", to_json(mu.matrix())["data"]}};
}

HomSpec homspec_from_json(const Json& j, const std::filesystem::path& base_dir) {
  return guarded("homomorphism", [&] {
    WeightedFan source = fan_ref_from_json(j.at("source"), base_dir);
    WeightedFan target = fan_ref_from_json(j.at("target"), base_dir);
    const Json& images = j.at("images");
    if (!images.is_array() || images.empty()) parse_fail("'images' must be a non-empty array");
    std::vector<IntVector> rows;
    for (const Json& img : images) {
      RayFunction f = ray_function_from_json(img, target.size());
      if (f.is_bottom()) {
        throw Error(ErrorCode::InvalidHomSpec, "generator images cannot be -inf");
      }
      rows.push_back(f.values());
    }
    return HomSpec{std::move(source), std::move(target), IntMatrix::from_rows(rows)};
  });
}

Json to_json(const HomSpec& h) {
  return Json{{"source", to_json(h.source)},
              {"target", to_json(h.target)},
              {"images", to_json(h.images)["data"]}};
}

}  // namespace tropfan::io
