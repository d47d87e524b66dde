#include "tropfan/lp.hpp"

#include "tropfan/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace tropfan::lp {

namespace {

bool is_strict(Relation r) { return r == Relation::Less || r == Relation::Greater; }

void check_dims(std::size_t dim, const std::vector<Constraint>& constraints) {
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw Error(ErrorCode::DimensionMismatch, "constraint dimension");
  }
}

// Dense tableau for  A y = b, y >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<RatVector> rows, std::vector<std::size_t> basis, std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

  // Maximizes obj . y with Bland's rule; columns >= `limit` never enter.
  Status maximize(const RatVector& obj, std::size_t limit) {
    for (;;) {
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < limit; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = obj[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
          if (rows_[i][j] != 0) reduced -= obj[basis_[i]] * rows_[i][j];
        }
        if (reduced > 0) {
          enter = j;
          break;
        }
      }
      if (enter == columns_) return Status::Optimal;

      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rows_[i][columns_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return Status::Unbounded;
      pivot(leave, enter);
    }
  }

  Rational value(const RatVector& obj) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) v += obj[basis_[i]] * rows_[i][columns_];
    return v;
  }

  RatVector solution() const {
    RatVector y(columns_);
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][columns_];
    return y;
  }

  // Pivots every basic column >= `limit` out of the basis, dropping rows
  // that turn out to be redundant.
  void expel(std::size_t limit) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < limit) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < limit && (rows_[i][j] == 0 || is_basic(j))) ++j;
      if (j < limit) {
        pivot(i, j);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

 private:
  bool is_basic(std::size_t j) const {
    return std::find(basis_.begin(), basis_.end(), j) != basis_.end();
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      Rational f = rows_[i][c];
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
      }
    }
    basis_[r] = c;
  }

  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
};

Solution solve_max(const RatVector& objective, const std::vector<Constraint>& constraints) {
  const std::size_t d = objective.size();
  check_dims(d, constraints);
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (is_strict(c.relation)) {
      throw Error(ErrorCode::BadParameters, "simplex accepts only non-strict constraints");
    }
    if (c.relation != Relation::Equal) ++slacks;
  }
  const std::size_t m = constraints.size();
  const std::size_t structural = 2 * d + slacks;
  const std::size_t columns = structural + m;

  std::vector<RatVector> rows;
  std::vector<std::size_t> basis;
  std::size_t slack = 2 * d;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& c = constraints[k];
    RatVector row(columns + 1);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = c.coeffs[j];
      row[d + j] = -c.coeffs[j];
    }
    if (c.relation == Relation::LessEqual) row[slack++] = 1;
    if (c.relation == Relation::GreaterEqual) row[slack++] = -1;
    row[columns] = c.rhs;
    if (c.rhs < 0) {
      for (auto& x : row) x = -x;
    }
    row[structural + k] = 1;
    rows.push_back(std::move(row));
    basis.push_back(structural + k);
  }

  Tableau tab(std::move(rows), std::move(basis), columns);
  RatVector phase1(columns);
  for (std::size_t k = 0; k < m; ++k) phase1[structural + k] = -1;
  tab.maximize(phase1, columns);
  if (tab.value(phase1) < 0) return Solution{Status::Infeasible, 0, {}};
  tab.expel(structural);

  RatVector phase2(columns);
  for (std::size_t j = 0; j < d; ++j) {
    phase2[j] = objective[j];
    phase2[d + j] = -objective[j];
  }
  Solution out;
  out.status = tab.maximize(phase2, structural);
  RatVector y = tab.solution();
  out.point.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.point[j] = y[j] - y[d + j];
  if (out.status == Status::Optimal) out.value = tab.value(phase2);
  return out;
}

// a . x >= b, or > b when strict.
struct Halfspace {
  RatVector a;
  Rational b;
  bool strict = false;
};

std::vector<Halfspace> to_halfspaces(const std::vector<Constraint>& constraints) {
  std::vector<Halfspace> out;
  auto negated = [](const RatVector& v) {
    RatVector n(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) n[i] = -v[i];
    return n;
  };
  for (const auto& c : constraints) {
    switch (c.relation) {
      case Relation::GreaterEqual: out.push_back({c.coeffs, c.rhs, false}); break;
      case Relation::Greater: out.push_back({c.coeffs, c.rhs, true}); break;
      case Relation::LessEqual: out.push_back({negated(c.coeffs), -c.rhs, false}); break;
      case Relation::Less: out.push_back({negated(c.coeffs), -c.rhs, true}); break;
      case Relation::Equal:
        out.push_back({c.coeffs, c.rhs, false});
        out.push_back({negated(c.coeffs), -c.rhs, false});
        break;
    }
  }
  return out;
}

// Scales to a leading coefficient of +-1 and keeps only the tightest
// halfspace per direction. Returns false if a constant constraint fails.
bool normalize(std::vector<Halfspace>& hs) {
  std::map<RatVector, std::pair<Rational, bool>> tightest;
  for (auto& h : hs) {
    auto lead = std::find_if(h.a.begin(), h.a.end(), [](const Rational& x) { return x != 0; });
    if (lead == h.a.end()) {
      if (h.strict ? !(h.b < 0) : !(h.b <= 0)) return false;
      continue;
    }
    Rational scale = *lead < 0 ? Rational(-*lead) : *lead;
    for (auto& x : h.a) x /= scale;
    h.b /= scale;
    auto [it, inserted] = tightest.try_emplace(h.a, h.b, h.strict);
    if (!inserted) {
      auto& [b, strict] = it->second;
      if (h.b > b || (h.b == b && h.strict)) {
        b = h.b;
        strict = h.strict;
      }
    }
  }
  hs.clear();
  for (auto& [a, bs] : tightest) hs.push_back({a, bs.first, bs.second});
  return true;
}

Rational ceil_rational(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (f * den != num && num > 0) f += 1;
  return Rational(f);
}

Rational floor_rational(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (f * den != num && num < 0) f -= 1;
  return Rational(f);
}

// Value inside the interval given by optional bounds, preferring small
// integers.
Rational pick_value(const std::optional<std::pair<Rational, bool>>& lo,
                    const std::optional<std::pair<Rational, bool>>& hi) {
  auto ok_lo = [&](const Rational& v) { return !lo || (lo->second ? v > lo->first : v >= lo->first); };
  auto ok_hi = [&](const Rational& v) { return !hi || (hi->second ? v < hi->first : v <= hi->first); };
  if (ok_lo(0) && ok_hi(0)) return 0;
  Rational candidate;
  if (lo) {
    candidate = ceil_rational(lo->first);
    if (!ok_lo(candidate)) candidate += 1;
  } else {
    candidate = floor_rational(hi->first);
    if (!ok_hi(candidate)) candidate -= 1;
  }
  if (ok_lo(candidate) && ok_hi(candidate)) return candidate;
  return (lo->first + hi->first) / 2;
}

}  // namespace

Solution maximize(const RatVector& objective, const std::vector<Constraint>& constraints) {
  return solve_max(objective, constraints);
}

Solution minimize(const RatVector& objective, const std::vector<Constraint>& constraints) {
  RatVector neg(objective.size());
  for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
  Solution s = solve_max(neg, constraints);
  s.value = -s.value;
  return s;
}

bool satisfies(const RatVector& x, const Constraint& c) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) lhs += c.coeffs[i] * x[i];
  switch (c.relation) {
    case Relation::LessEqual: return lhs <= c.rhs;
    case Relation::GreaterEqual: return lhs >= c.rhs;
    case Relation::Equal: return lhs == c.rhs;
    case Relation::Less: return lhs < c.rhs;
    case Relation::Greater: return lhs > c.rhs;
  }
  return false;
}

std::optional<RatVector> simplex_point(std::size_t dim, const std::vector<Constraint>& constraints) {
  check_dims(dim, constraints);
  // Extra variable s: strict rows become  a.x - s >= b  (resp. a.x + s <= b); s <= 1.
  std::vector<Constraint> lifted;
  bool any_strict = false;
  for (const auto& c : constraints) {
    Constraint l{c.coeffs, c.relation, c.rhs};
    l.coeffs.push_back(0);
    if (c.relation == Relation::Greater) {
      l.coeffs.back() = -1;
      l.relation = Relation::GreaterEqual;
      any_strict = true;
    } else if (c.relation == Relation::Less) {
      l.coeffs.back() = 1;
      l.relation = Relation::LessEqual;
      any_strict = true;
    }
    lifted.push_back(std::move(l));
  }
  RatVector cap(dim + 1);
  cap[dim] = 1;
  lifted.push_back({cap, Relation::LessEqual, 1});
  Solution s = solve_max(cap, lifted);
  if (s.status == Status::Infeasible) return std::nullopt;
  if (any_strict && !(s.value > 0)) return std::nullopt;
  s.point.pop_back();
  return s.point;
}

std::optional<RatVector> fourier_motzkin_point(std::size_t dim,
                                               const std::vector<Constraint>& constraints,
                                               bool* exhausted, std::size_t max_constraints) {
  check_dims(dim, constraints);
  if (exhausted) *exhausted = false;
  std::vector<Halfspace> current = to_halfspaces(constraints);
  if (!normalize(current)) return std::nullopt;

  // levels[k] holds the system over variables 0..k.
  std::vector<std::vector<Halfspace>> levels(dim);
  for (std::size_t k = dim; k-- > 0;) {
    levels[k] = current;
    std::vector<Halfspace> lower, upper, next;
    for (const auto& h : current) {
      if (h.a[k] > 0) lower.push_back(h);
      else if (h.a[k] < 0) upper.push_back(h);
      else next.push_back(h);
    }
    if (lower.size() * upper.size() + next.size() > max_constraints) {
      if (exhausted) *exhausted = true;
      return std::nullopt;
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        // lo.a[k] > 0, up.a[k] < 0: combine to cancel x_k.
        Rational f = lo.a[k];
        Rational g = -up.a[k];
        Halfspace h;
        h.a.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) h.a[i] = g * lo.a[i] + f * up.a[i];
        h.a[k] = 0;
        h.b = g * lo.b + f * up.b;
        h.strict = lo.strict || up.strict;
        next.push_back(std::move(h));
      }
    }
    if (!normalize(next)) return std::nullopt;
    current = std::move(next);
  }

  RatVector x(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::optional<std::pair<Rational, bool>> lo, hi;
    for (const auto& h : levels[k]) {
      if (h.a[k] == 0) continue;
      Rational rest = h.b;
      for (std::size_t i = 0; i < k; ++i) rest -= h.a[i] * x[i];
      Rational bound = rest / h.a[k];
      if (h.a[k] > 0) {
        if (!lo || bound > lo->first || (bound == lo->first && h.strict)) lo = {bound, h.strict};
      } else {
        if (!hi || bound < hi->first || (bound == hi->first && h.strict)) hi = {bound, h.strict};
      }
    }
    x[k] = pick_value(lo, hi);
  }
  return x;
}

std::optional<RatVector> feasible_point(std::size_t dim, const std::vector<Constraint>& constraints) {
  if (dim <= 4) {
    bool exhausted = false;
    auto p = fourier_motzkin_point(dim, constraints, &exhausted);
    if (!exhausted) return p;
  }
  return simplex_point(dim, constraints);
}

}  // namespace tropfan::lp
