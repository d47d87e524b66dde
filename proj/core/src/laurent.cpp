#include "tropfan/laurent.hpp"

#include "tropfan/error.hpp"
#include "tropfan/lp.hpp"

#include <algorithm>

namespace tropfan {

namespace {

void require_vars(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected " + std::to_string(expected) + " variables, got " +
                    std::to_string(got));
  }
}

Integer l1_distance(const Exponent& u, const Exponent& v) {
  Integer d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += abs(Integer(u[i] - v[i]));
  return d;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Exponent u, Rational coeff) {
  LaurentPoly p(u.size());
  p.add_term(std::move(u), std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, Rational coeff) {
  return monomial(Exponent(num_vars), std::move(coeff));
}

LaurentPoly LaurentPoly::variable(std::size_t num_vars, std::size_t i) {
  Exponent u(num_vars);
  u.at(i) = 1;
  return monomial(std::move(u));
}

void LaurentPoly::add_term(Exponent u, Rational coeff) {
  require_vars(num_vars_, u.size(), "add_term");
  auto [it, inserted] = terms_.try_emplace(std::move(u), coeff);
  if (!inserted && it->second < coeff) it->second = std::move(coeff);
}

bool LaurentPoly::is_boolean() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 0; });
}

TropValue eval(const LaurentPoly& p, const RatVector& point) {
  require_vars(p.num_vars(), point.size(), "eval");
  TropValue best;
  for (const auto& [u, a] : p.terms()) best = trop_add(best, TropValue(a + dot(u, point)));
  return best;
}

TropValue eval(const LaurentPoly& p, const IntVector& point) { return eval(p, to_rational(point)); }

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  require_vars(p.num_vars(), q.num_vars(), "add");
  LaurentPoly out = p;
  for (const auto& [u, a] : q.terms()) out.add_term(u, a);
  return out;
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
  require_vars(p.num_vars(), q.num_vars(), "mul");
  LaurentPoly out(p.num_vars());
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      Exponent w(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
      out.add_term(std::move(w), a + b);
    }
  }
  return out;
}

LaurentPoly shift(const LaurentPoly& p, const RatVector& a) {
  require_vars(p.num_vars(), a.size(), "shift");
  LaurentPoly out(p.num_vars());
  for (const auto& [u, c] : p.terms()) out.add_term(u, c + dot(u, a));
  return out;
}

LaurentPoly initial_form(const LaurentPoly& p, const RatVector& point) {
  require_vars(p.num_vars(), point.size(), "initial_form");
  if (p.is_bottom()) throw Error(ErrorCode::EmptyPolynomial, "-inf has no initial form");
  const Rational top = eval(p, point).value();
  LaurentPoly out(p.num_vars());
  for (const auto& [u, a] : p.terms()) {
    if (a + dot(u, point) == top) out.add_term(u, a);
  }
  return out;
}

LaurentPoly boolean_part(const LaurentPoly& p) {
  LaurentPoly out(p.num_vars());
  for (const auto& [u, a] : p.terms()) out.add_term(u, 0);
  return out;
}

std::optional<RatVector> dominance_witness(const LaurentPoly& p, const Exponent& u,
                                           LpEngine engine) {
  auto self = p.terms().find(u);
  if (self == p.terms().end()) return std::nullopt;
  const std::size_t n = p.num_vars();
  // (u - v).x > a_v - a_u for every other term v.
  std::vector<lp::Constraint> system;
  for (const auto& [v, b] : p.terms()) {
    if (v == u) continue;
    lp::Constraint c;
    c.coeffs.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.coeffs[i] = Rational(u[i] - v[i]);
    c.relation = lp::Relation::Greater;
    c.rhs = b - self->second;
    system.push_back(std::move(c));
  }
  switch (engine) {
    case LpEngine::FourierMotzkin: {
      bool exhausted = false;
      auto x = lp::fourier_motzkin_point(n, system, &exhausted, 1u << 20);
      if (exhausted) throw Error(ErrorCode::Unsupported, "Fourier-Motzkin system too large");
      return x;
    }
    case LpEngine::Simplex: return lp::simplex_point(n, system);
    case LpEngine::Auto: break;
  }
  return lp::feasible_point(n, system);
}

CanonicalFn canonicalize(const LaurentPoly& p, LpEngine engine) {
  CanonicalFn f(p.num_vars());
  for (const auto& [u, a] : p.terms()) {
    if (dominance_witness(p, u, engine)) f.poly_.add_term(u, a);
  }
  return f;
}

std::optional<CanonicalFn> CanonicalFn::unit_inverse() const {
  if (!poly_.is_monomial()) return std::nullopt;
  const auto& [u, a] = *poly_.terms().begin();
  Exponent neg(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
  return canonicalize(LaurentPoly::monomial(std::move(neg), -a));
}

CanonicalFn operator+(const CanonicalFn& f, const CanonicalFn& g) {
  return canonicalize(add(f.poly(), g.poly()));
}

CanonicalFn operator*(const CanonicalFn& f, const CanonicalFn& g) {
  return canonicalize(mul(f.poly(), g.poly()));
}

FnComparison fn_eq(const LaurentPoly& p, const LaurentPoly& q) {
  require_vars(p.num_vars(), q.num_vars(), "fn_eq");
  CanonicalFn f = canonicalize(p);
  CanonicalFn g = canonicalize(q);
  if (f == g) return FnComparison{true, std::nullopt};
  const std::size_t n = p.num_vars();
  if (f.is_zero() || g.is_zero()) return FnComparison{false, RatVector(n)};

  // max(f, g) differs from f or from g; a hull vertex of the union that is
  // missing from one side is strictly maximal somewhere, which separates them.
  LaurentPoly joint = add(f.poly(), g.poly());
  CanonicalFn h = canonicalize(joint);
  const CanonicalFn& missing_from = (h == g) ? f : g;
  for (const auto& [u, a] : h.poly().terms()) {
    auto it = missing_from.poly().terms().find(u);
    if (it != missing_from.poly().terms().end() && it->second == a) continue;
    auto w = dominance_witness(joint, u);
    if (w && eval(p, *w) != eval(q, *w)) return FnComparison{false, std::move(w)};
  }
  throw Error(ErrorCode::Unsupported, "fn_eq: failed to extract a separating point");
}

GermValue germ_localize(const LaurentPoly& p, const RatVector& point) {
  require_vars(p.num_vars(), point.size(), "germ_localize");
  if (p.is_bottom()) return GermValue::bottom();
  return GermValue(canonicalize(boolean_part(initial_form(p, point))), eval(p, point).value());
}

bool germ_eq(const LaurentPoly& p, const LaurentPoly& q, const RatVector& point) {
  require_vars(p.num_vars(), q.num_vars(), "germ_eq");
  return germ_localize(p, point) == germ_localize(q, point);
}

Rational germ_safe_radius(const LaurentPoly& p, const RatVector& point) {
  require_vars(p.num_vars(), point.size(), "germ_safe_radius");
  if (p.is_bottom()) throw Error(ErrorCode::EmptyPolynomial, "-inf has no germ radius");
  const Rational top = eval(p, point).value();
  std::optional<Rational> slack;
  for (const auto& [u, a] : p.terms()) {
    Rational s = top - (a + dot(u, point));
    if (s > 0 && (!slack || s < *slack)) slack = s;
  }
  if (!slack) return 1;
  Integer spread = 0;
  for (auto i = p.terms().begin(); i != p.terms().end(); ++i) {
    for (auto j = std::next(i); j != p.terms().end(); ++j) {
      spread = std::max(spread, l1_distance(i->first, j->first));
    }
  }
  return *slack / Rational(1 + spread);
}

}  // namespace tropfan
