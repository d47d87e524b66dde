#pragma once

// Seeded generators for property tests and the acceptance suite.

#include "tropfan/error.hpp"
#include "tropfan/evalmap.hpp"
#include "tropfan/morphism.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace tropfan::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long long>(n) - 1)); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

inline IntVector random_vector(Rng& rng, std::size_t n, long long bound) {
  IntVector v(n);
  for (Integer& x : v) x = rng.uniform(-bound, bound);
  return v;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  }
  return m;
}

/// Product of random elementary operations; entries stay small.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps = 0) {
  IntMatrix u = IntMatrix::identity(n);
  if (steps == 0) steps = 3 * n;
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = rng.index(n), j = rng.index(n);
    switch (rng.uniform(0, 2)) {
      case 0:
        if (i != j) {
          const long long k = rng.coin() ? rng.uniform(1, 2) : -rng.uniform(1, 2);
          for (std::size_t c = 0; c < n; ++c) u(i, c) += k * u(j, c);
        }
        break;
      case 1:
        for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
        break;
      default:
        for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
        break;
    }
  }
  return u;
}

/// Rational with numerator in [-num, num] and denominator in [1, den].
inline Rational random_rational(Rng& rng, long long num, long long den) {
  return Rational(Integer(rng.uniform(-num, num)), Integer(rng.uniform(1, den)));
}

inline RatVector random_point(Rng& rng, std::size_t n, long long num = 6, long long den = 4) {
  RatVector p(n);
  for (Rational& q : p) q = random_rational(rng, num, den);
  return p;
}

struct PolyShape {
  std::size_t min_terms = 1;
  std::size_t max_terms = 5;
  long long exp_bound = 3;
  long long coeff_num = 4;
  long long coeff_den = 2;
  bool boolean = false;
};

inline LaurentPoly random_poly(Rng& rng, std::size_t n, const PolyShape& shape = {}) {
  LaurentPoly p(n);
  std::size_t distinct = 1;
  for (std::size_t i = 0; i < n && distinct < shape.max_terms; ++i) {
    distinct *= static_cast<std::size_t>(2 * shape.exp_bound + 1);
  }
  const std::size_t terms = std::min<std::size_t>(
      distinct, static_cast<std::size_t>(rng.uniform(static_cast<long long>(shape.min_terms),
                                                      static_cast<long long>(shape.max_terms))));
  while (p.size() < terms) {
    Rational c = shape.boolean ? Rational(0) : random_rational(rng, shape.coeff_num, shape.coeff_den);
    p.add_term(random_vector(rng, n, shape.exp_bound), c);
  }
  return p;
}

inline std::size_t matrix_rank(const IntMatrix& m) {
  return m.cols() - linear_relations(m).size();
}

/// Balanced fan with at most `max_rays` rays and weights in [1, max_weight]:
/// random weighted rays closed off by the negative of their sum.
inline WeightedFan random_balanced_fan(Rng& rng, std::size_t n, std::size_t max_rays,
                                       long long max_weight, long long dir_bound = 3) {
  for (;;) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(2, static_cast<long long>(max_rays)));
    std::vector<Ray> rays;
    IntVector sum(n);
    for (std::size_t k = 0; k + 1 < r; ++k) {
      IntVector v = random_vector(rng, n, dir_bound);
      if (is_zero(v)) continue;
      IntVector d = primitive(v).second;
      Integer w = rng.uniform(1, max_weight);
      for (std::size_t i = 0; i < n; ++i) sum[i] += w * d[i];
      rays.push_back(Ray{std::move(d), std::move(w)});
    }
    if (rays.empty() || is_zero(sum)) continue;
    IntVector neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -sum[i];
    auto [w, d] = primitive(neg);
    if (w > max_weight) continue;
    rays.push_back(Ray{std::move(d), std::move(w)});
    try {
      return WeightedFan::make(n, rays);
    } catch (const Error&) {
      // two rays share a direction; draw again
    }
  }
}

inline WeightedFan random_spanning_fan(Rng& rng, std::size_t n, std::size_t max_rays,
                                       long long max_weight) {
  for (;;) {
    WeightedFan x = random_balanced_fan(rng, n, std::max(max_rays, n + 1), max_weight);
    if (matrix_rank(generator_matrix(x)) == n) return x;
  }
}

/// The fan of weighted images of X's rays under T (weights pushed forward, so
/// it is balanced), optionally with an extra pair of opposite rays. Returns
/// nullopt when T kills every ray.
inline std::optional<WeightedFan> pushforward_fan(Rng& rng, const WeightedFan& x, const IntMatrix& t,
                                                  bool extra_pair) {
  std::map<IntVector, Integer> weights;
  for (const Ray& r : x.rays()) {
    IntVector v = t.apply(r.direction);
    if (is_zero(v)) continue;
    auto [g, d] = primitive(v);
    weights[d] += g * r.weight;
  }
  if (weights.empty()) return std::nullopt;
  if (extra_pair) {
    IntVector v = random_vector(rng, t.rows(), 2);
    if (!is_zero(v)) {
      IntVector d = primitive(v).second;
      IntVector neg(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) neg[i] = -d[i];
      if (!weights.count(d) && !weights.count(neg)) {
        weights[d] = 1;
        weights[neg] = 1;
      }
    }
  }
  std::vector<Ray> rays;
  for (auto& [d, w] : weights) rays.push_back(Ray{d, w});
  return WeightedFan::make(t.rows(), rays);
}

/// A valid morphism out of X into an ambient space of dimension m.
inline FanMorphism random_morphism_from(Rng& rng, const WeightedFan& x, std::size_t m,
                                        long long bound = 2) {
  for (;;) {
    IntMatrix t = random_matrix(rng, m, x.ambient_dim(), bound);
    auto y = pushforward_fan(rng, x, t, rng.coin());
    if (y) return FanMorphism::make(x, *y, std::move(t));
  }
}

}  // namespace tropfan::testing
