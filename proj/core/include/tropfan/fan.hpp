#pragma once

// Weighted 1-dimensional fans in R^n.

#include "tropfan/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropfan {

struct Ray {
  IntVector direction;  // primitive
  Integer weight;       // >= 1

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// v = w * d with d primitive and w the gcd of |entries|. Throws ZeroVector.
std::pair<Integer, IntVector> primitive(const IntVector& v);

/// Rays are stored sorted lexicographically by direction, so two fans with the
/// same weighted rays compare equal regardless of input order.
class WeightedFan {
 public:
  /// Primitivizes every direction, absorbing the gcd into the weight. Throws
  /// DimensionMismatch, ZeroVector, BadParameters (no rays, weight < 1) or
  /// DuplicateRay (two inputs share a primitive direction).
  static WeightedFan make(std::size_t ambient_dim, const std::vector<Ray>& rays);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  const std::vector<Ray>& rays() const noexcept { return rays_; }
  std::size_t size() const noexcept { return rays_.size(); }
  const Ray& ray(std::size_t i) const { return rays_.at(i); }

  std::optional<std::size_t> find(const IntVector& primitive_direction) const;

  friend bool operator==(const WeightedFan&, const WeightedFan&) = default;

 private:
  WeightedFan() = default;
  std::size_t ambient_dim_ = 0;
  std::vector<Ray> rays_;
};

/// sum of w * d over all rays is 0.
bool check_balancing(const WeightedFan& x);

/// L_{n,r}: e_1..e_{r-1} and -(e_1 + ... + e_{r-1}), weights 1.
/// Throws BadParameters unless 2 <= r <= n + 1.
WeightedFan standard_model(std::size_t n, std::size_t r);

/// v = 0 or v = t * d for some ray direction d and rational t > 0.
bool support_contains(const WeightedFan& x, const RatVector& v);
bool support_contains(const WeightedFan& x, const IntVector& v);

/// Index of the ray whose open half-line contains v, if any.
std::optional<std::size_t> ray_containing(const WeightedFan& x, const IntVector& v);

/// "(1,-2)"
std::string ray_name(const Ray& ray);

}  // namespace tropfan
