#pragma once

// Tropical and Boolean Laurent polynomials: arithmetic, evaluation, initial
// forms, canonical function representatives and germs at a point.

#include "tropfan/numeric.hpp"
#include "tropfan/semiring.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropfan {

using Exponent = IntVector;

/// Finite max of affine forms a_u + u.p. The empty term map is -inf; no
/// stored coefficient is -inf. Terms are kept in lexicographic exponent order.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPoly monomial(Exponent u, Rational coeff = 0);
  static LaurentPoly constant(std::size_t num_vars, Rational coeff);
  /// The Boolean monomial x_i (0-based).
  static LaurentPoly variable(std::size_t num_vars, std::size_t i);

  /// Adds a (.) x^u, keeping the max coefficient on collision.
  void add_term(Exponent u, Rational coeff);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_bottom() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// All coefficients are 0 (the empty polynomial counts as Boolean).
  bool is_boolean() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t num_vars_;
  std::map<Exponent, Rational> terms_;
};

TropValue eval(const LaurentPoly& p, const RatVector& point);
TropValue eval(const LaurentPoly& p, const IntVector& point);

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }

/// P(a + x): each coefficient a_u becomes a_u + u.a.
LaurentPoly shift(const LaurentPoly& p, const RatVector& a);

/// Terms attaining the maximum at the point. Throws EmptyPolynomial for -inf.
LaurentPoly initial_form(const LaurentPoly& p, const RatVector& point);

/// Same exponents, every coefficient 0.
LaurentPoly boolean_part(const LaurentPoly& p);

enum class LpEngine { Auto, FourierMotzkin, Simplex };

/// The function class of a polynomial, represented by its non-redundant
/// terms. Structural equality coincides with equality as functions on Q^n.
class CanonicalFn {
 public:
  explicit CanonicalFn(std::size_t num_vars = 0) : poly_(num_vars) {}

  std::size_t num_vars() const noexcept { return poly_.num_vars(); }
  const LaurentPoly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_bottom(); }

  /// Monomials are the units; their inverse negates exponent and coefficient.
  std::optional<CanonicalFn> unit_inverse() const;

  friend CanonicalFn operator+(const CanonicalFn& f, const CanonicalFn& g);
  friend CanonicalFn operator*(const CanonicalFn& f, const CanonicalFn& g);
  friend bool operator==(const CanonicalFn&, const CanonicalFn&) = default;

 private:
  friend CanonicalFn canonicalize(const LaurentPoly& p, LpEngine engine);
  LaurentPoly poly_;
};

/// Drops every term (u, a_u) lying on or below the upper hull of the other
/// lifted terms, decided by exact strict-feasibility tests.
CanonicalFn canonicalize(const LaurentPoly& p, LpEngine engine = LpEngine::Auto);

/// Whether the term at `u` is a vertex of the lifted upper hull: some point
/// makes it strictly larger than every other term. Returns such a point.
std::optional<RatVector> dominance_witness(const LaurentPoly& p, const Exponent& u,
                                           LpEngine engine = LpEngine::Auto);

struct FnComparison {
  bool equal = false;
  std::optional<RatVector> witness;  // eval(P, w) != eval(Q, w) when !equal
};

FnComparison fn_eq(const LaurentPoly& p, const LaurentPoly& q);

/// Local germ at a point: (canonical Boolean part of the initial form, value).
using GermValue = TExtElement<CanonicalFn>;

GermValue germ_localize(const LaurentPoly& p, const RatVector& point);
bool germ_eq(const LaurentPoly& p, const LaurentPoly& q, const RatVector& point);

/// delta > 0 with eval(P, q) = eval(initial_form(P, p), q) whenever
/// max_i |q_i - p_i| < delta. Throws EmptyPolynomial.
Rational germ_safe_radius(const LaurentPoly& p, const RatVector& point);

}  // namespace tropfan
