#pragma once

// The weighted evaluation map of a 1-dimensional fan and the decision
// procedures built on it: realizability, kernel equality, image membership
// and smoothness at the origin.

#include "tropfan/fan.hpp"
#include "tropfan/intlat.hpp"
#include "tropfan/laurent.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tropfan {

/// A map from the rays of a fan to Z u {-inf}. Either every entry is an
/// integer or the function is the bottom element (every entry -inf).
class RayFunction {
 public:
  explicit RayFunction(IntVector values) : values_(std::move(values)), size_(values_.size()) {}

  static RayFunction bottom(std::size_t num_rays);

  bool is_bottom() const noexcept { return bottom_; }
  std::size_t size() const noexcept { return size_; }
  /// Empty for bottom.
  const IntVector& values() const noexcept { return values_; }
  const Integer& operator[](std::size_t i) const { return values_.at(i); }

  /// Sum of the entries; nullopt stands for -inf.
  std::optional<Integer> degree() const;

  friend bool operator==(const RayFunction& a, const RayFunction& b) {
    return a.size() == b.size() && a.bottom_ == b.bottom_ && a.values_ == b.values_;
  }

 private:
  RayFunction() = default;
  IntVector values_;
  std::size_t size_ = 0;
  bool bottom_ = false;
};

/// Pointwise max and pointwise sum (the semiring operations of Z^A).
/// Throw DimensionMismatch on different ray counts.
RayFunction oplus(const RayFunction& f, const RayFunction& g);
RayFunction otimes(const RayFunction& f, const RayFunction& g);

/// rho -> w_rho * f(d_rho). Throws NonBooleanInput, DimensionMismatch.
RayFunction eval_map(const WeightedFan& x, const LaurentPoly& f);

/// n x |rays| matrix whose column at a ray is w * d.
IntMatrix generator_matrix(const WeightedFan& x);

/// Every row has degree 0, no column is zero and no column is a positive
/// multiple of another.
bool is_realizable(const IntMatrix& m);

/// Column gcd becomes the weight. Throws NotRealizable.
WeightedFan reconstruct_fan(const IntMatrix& m);

/// f and g agree on every ray of the fan. Throws NonBooleanInput,
/// DimensionMismatch.
bool ker_eq(const WeightedFan& x, const LaurentPoly& f, const LaurentPoly& g);

/// Drops the last column: coordinates on the degree-0 part Z_0^A ~ Z^(|A|-1).
/// Throws BadParameters for a single column.
IntMatrix degree0_coordinates(const IntMatrix& m);

enum class MembershipStatus { Member, NonMember, Inconclusive };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::Inconclusive;
  std::optional<LaurentPoly> witness;     // set for Member; eval_map(x, witness) == G
  std::optional<std::size_t> failed_ray;  // the ray that settled NonMember / Inconclusive
};

/// Decides G in Im(eval_map) ray by ray: for each ray a, looks for an integer
/// z with (z.F)(b) <= G(b) everywhere and equality at a. Integer search is
/// exact inside the LP bounds; if those bounds leave the box |coords| <= bound
/// the answer is Inconclusive. Throws DimensionMismatch, BadParameters.
MembershipResult image_membership(const WeightedFan& x, const RayFunction& g, long long bound);

enum class SmoothFailure { None, Weight, Rank, Index };

struct SmoothReport {
  bool smooth = false;
  SmoothFailure failure = SmoothFailure::None;
  std::size_t rank = 0;               // rank of the degree-0 generator matrix
  std::size_t expected_rank = 0;      // |rays| - 1
  Integer index = 0;                  // lattice index when rank is full
  std::optional<std::size_t> heavy_ray;  // a ray of weight > 1
  IntVector invariant_factors;

  /// "lattice index 5", "rank 2 < 3", "weight 2 on ray (1,0)"; empty when smooth.
  std::string reason(const WeightedFan& x) const;
};

/// Smoothness at the origin via surjectivity of the evaluation map. Checks
/// weights, then rank, then lattice index. Throws NotBalanced.
SmoothReport smooth_report(const WeightedFan& x);
inline bool is_smooth(const WeightedFan& x) { return smooth_report(x).smooth; }

/// Basis of {t in Q^cols : M t = 0}, one primitive integer vector per free
/// column of the reduced row echelon form.
std::vector<IntVector> linear_relations(const IntMatrix& m);

}  // namespace tropfan
