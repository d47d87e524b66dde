#pragma once

// Fan morphisms given by integer matrices, pullbacks, and realization of
// geometric homomorphisms between image semirings.

#include "tropfan/evalmap.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropfan {

/// T * d lies in |target| for every source ray d.
bool validate_morphism(const IntMatrix& t, const WeightedFan& source, const WeightedFan& target);

/// A support-preserving linear map |source| -> |target|, with matrix of
/// shape target.ambient_dim() x source.ambient_dim().
class FanMorphism {
 public:
  /// Throws DimensionMismatch or InvalidMorphism.
  static FanMorphism make(WeightedFan source, WeightedFan target, IntMatrix matrix);

  const WeightedFan& source() const noexcept { return source_; }
  const WeightedFan& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

 private:
  FanMorphism(WeightedFan s, WeightedFan t, IntMatrix m)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  WeightedFan source_;
  WeightedFan target_;
  IntMatrix matrix_;
};

/// A homomorphism Im(phi_source) -> Im(phi_target) given by the images of the
/// generators phi_source([y_i]): images(i, rho) is the value at target ray rho.
/// So `images` is source.ambient_dim() x target.size().
struct HomSpec {
  WeightedFan source;
  WeightedFan target;
  IntMatrix images;
};

/// Q(x^t_1, ..., x^t_m) for the rows t_j of the matrix. Coefficients carry
/// over unchanged. Throws DimensionMismatch.
LaurentPoly pullback_poly(const FanMorphism& mu, const LaurentPoly& q);

/// rho -> w_rho * f(T d_rho) on the source rays. Throws NonBooleanInput,
/// DimensionMismatch.
RayFunction pullback_evalmap(const FanMorphism& mu, const LaurentPoly& f);

/// The homomorphism mu^* on generators: images = T * F_source.
HomSpec pullback_homspec(const FanMorphism& mu);

/// For each column of `images`, the index of a column of `generators` it is a
/// positive multiple of, or nullopt for a zero column. Returns nullopt overall
/// when some column matches nothing.
std::optional<std::vector<std::optional<std::size_t>>> geometric_ray_map(
    const IntMatrix& images, const IntMatrix& generators);

bool check_geometric(const IntMatrix& images, const IntMatrix& generators);
/// Throws InvalidHomSpec when the image matrix has the wrong shape.
bool check_geometric(const HomSpec& h);

/// The fan morphism target -> source whose pullback is h. Throws
/// InvalidHomSpec (shape or degree), NotBalanced, NotGeometric,
/// NoIntegerSolution or SupportViolation.
FanMorphism realize_morphism(const HomSpec& h);

/// mu2 after mu1. Throws CompositionMismatch.
FanMorphism compose(const FanMorphism& mu2, const FanMorphism& mu1);

/// Target ray containing T d for each source ray; nullopt where T d = 0.
std::vector<std::optional<std::size_t>> ray_map(const FanMorphism& mu);

}  // namespace tropfan
