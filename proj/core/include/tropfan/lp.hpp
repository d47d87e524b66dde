#pragma once

// Exact rational linear programming over free variables.
//
// Two independent engines are provided: a dense two-phase simplex with
// Bland's rule, and Fourier-Motzkin elimination with strictness tracking.
// Both can produce a point satisfying a system with strict inequalities.

#include "tropfan/numeric.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tropfan::lp {

enum class Relation { LessEqual, GreaterEqual, Equal, Less, Greater };

struct Constraint {
  RatVector coeffs;
  Relation relation;
  Rational rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  RatVector point;
};

/// max objective . x over the non-strict constraints (strict relations are
/// rejected with BadParameters).
Solution maximize(const RatVector& objective, const std::vector<Constraint>& constraints);
Solution minimize(const RatVector& objective, const std::vector<Constraint>& constraints);

/// A point satisfying every constraint (strict ones strictly), via simplex on
/// the slack-maximizing reformulation.
std::optional<RatVector> simplex_point(std::size_t dim, const std::vector<Constraint>& constraints);

/// Same contract as simplex_point, via Fourier-Motzkin elimination. Returns
/// nullopt with `exhausted` set if the intermediate system outgrows
/// `max_constraints`.
std::optional<RatVector> fourier_motzkin_point(std::size_t dim,
                                               const std::vector<Constraint>& constraints,
                                               bool* exhausted = nullptr,
                                               std::size_t max_constraints = 4096);

/// Fourier-Motzkin for dim <= 4 with simplex fallback.
std::optional<RatVector> feasible_point(std::size_t dim, const std::vector<Constraint>& constraints);

bool satisfies(const RatVector& x, const Constraint& c);

}  // namespace tropfan::lp
