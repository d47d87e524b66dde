#include "tropfan/fan.hpp"

#include "tropfan/error.hpp"

#include <algorithm>

namespace tropfan {

std::pair<Integer, IntVector> primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive: zero vector has no direction");
  IntVector d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i] / g;
  return {g, std::move(d)};
}

WeightedFan WeightedFan::make(std::size_t ambient_dim, const std::vector<Ray>& rays) {
  if (ambient_dim == 0) throw Error(ErrorCode::BadParameters, "fan: ambient dimension must be >= 1");
  if (rays.empty()) throw Error(ErrorCode::BadParameters, "fan: at least one ray is required");
  WeightedFan fan;
  fan.ambient_dim_ = ambient_dim;
  for (const Ray& r : rays) {
    if (r.direction.size() != ambient_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "fan: ray " + ray_name(r) + " does not have length " + std::to_string(ambient_dim));
    }
    if (r.weight < 1) {
      throw Error(ErrorCode::BadParameters, "fan: ray " + ray_name(r) + " has non-positive weight");
    }
    auto [g, d] = primitive(r.direction);
    fan.rays_.push_back(Ray{std::move(d), r.weight * g});
  }
  std::sort(fan.rays_.begin(), fan.rays_.end(),
            [](const Ray& a, const Ray& b) { return a.direction < b.direction; });
  auto dup = std::adjacent_find(fan.rays_.begin(), fan.rays_.end(), [](const Ray& a, const Ray& b) {
    return a.direction == b.direction;
  });
  if (dup != fan.rays_.end()) {
    throw Error(ErrorCode::DuplicateRay, "fan: direction " + ray_name(*dup) + " occurs twice");
  }
  return fan;
}

std::optional<std::size_t> WeightedFan::find(const IntVector& primitive_direction) const {
  auto it = std::lower_bound(
      rays_.begin(), rays_.end(), primitive_direction,
      [](const Ray& r, const IntVector& d) { return r.direction < d; });
  if (it == rays_.end() || it->direction != primitive_direction) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

bool check_balancing(const WeightedFan& x) {
  IntVector sum(x.ambient_dim());
  for (const Ray& r : x.rays()) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r.weight * r.direction[i];
  }
  return is_zero(sum);
}

WeightedFan standard_model(std::size_t n, std::size_t r) {
  if (n < 1 || r < 2 || r > n + 1) {
    throw Error(ErrorCode::BadParameters, "standard model L_{n,r} needs 2 <= r <= n+1 (n=" +
                                              std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  std::vector<Ray> rays;
  IntVector e0(n);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    IntVector e(n);
    e[i] = 1;
    e0[i] = -1;
    rays.push_back(Ray{std::move(e), 1});
  }
  rays.push_back(Ray{std::move(e0), 1});
  return WeightedFan::make(n, rays);
}

namespace {

// Primitive integer direction of a nonzero rational vector.
IntVector primitive_of(const RatVector& v) {
  Integer den = 1;
  for (const Rational& q : v) {
    Integer d = boost::multiprecision::denominator(q);
    den = den / gcd(den, d) * d;
  }
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = boost::multiprecision::numerator(v[i]) * (den / boost::multiprecision::denominator(v[i]));
  }
  return primitive(scaled).second;
}

}  // namespace

std::optional<std::size_t> ray_containing(const WeightedFan& x, const IntVector& v) {
  if (v.size() != x.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "support test: point has wrong dimension");
  }
  if (is_zero(v)) return std::nullopt;
  return x.find(primitive(v).second);
}

bool support_contains(const WeightedFan& x, const RatVector& v) {
  if (v.size() != x.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "support test: point has wrong dimension");
  }
  if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) return true;
  return x.find(primitive_of(v)).has_value();
}

bool support_contains(const WeightedFan& x, const IntVector& v) {
  return is_zero(v) || ray_containing(x, v).has_value();
}

std::string ray_name(const Ray& ray) {
  std::string s = "(";
  for (std::size_t i = 0; i < ray.direction.size(); ++i) {
    if (i) s += ",";
    s += to_string(ray.direction[i]);
  }
  return s + ")";
}

}  // namespace tropfan
