#include "tropfan/evalmap.hpp"

#include "tropfan/error.hpp"
#include "tropfan/lp.hpp"

#include <algorithm>

namespace tropfan {

namespace mp = boost::multiprecision;

RayFunction RayFunction::bottom(std::size_t num_rays) {
  RayFunction f;
  f.size_ = num_rays;
  f.bottom_ = true;
  return f;
}

std::optional<Integer> RayFunction::degree() const {
  if (bottom_) return std::nullopt;
  Integer sum = 0;
  for (const Integer& v : values_) sum += v;
  return sum;
}

namespace {

void require_same_size(const RayFunction& f, const RayFunction& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::DimensionMismatch, "ray functions live on different ray sets");
  }
}

void require_boolean_on(const WeightedFan& x, const LaurentPoly& f) {
  if (f.num_vars() != x.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "polynomial has " + std::to_string(f.num_vars()) + " variables, fan lives in R^" +
                    std::to_string(x.ambient_dim()));
  }
  if (!f.is_boolean()) {
    throw Error(ErrorCode::NonBooleanInput, "evaluation map needs a Boolean polynomial");
  }
}

Integer to_integer(const Rational& q) { return mp::numerator(q); }

bool positive_multiple(const IntVector& a, const IntVector& b) {
  // a = t b with t > 0, both nonzero.
  Integer ga = content(a), gb = content(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * gb != b[i] * ga) return false;
  }
  return true;
}

}  // namespace

RayFunction oplus(const RayFunction& f, const RayFunction& g) {
  require_same_size(f, g);
  if (f.is_bottom()) return g;
  if (g.is_bottom()) return f;
  IntVector out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(f[i], g[i]);
  return RayFunction(std::move(out));
}

RayFunction otimes(const RayFunction& f, const RayFunction& g) {
  require_same_size(f, g);
  if (f.is_bottom() || g.is_bottom()) return RayFunction::bottom(f.size());
  IntVector out(f.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
  return RayFunction(std::move(out));
}

RayFunction eval_map(const WeightedFan& x, const LaurentPoly& f) {
  require_boolean_on(x, f);
  if (f.is_bottom()) return RayFunction::bottom(x.size());
  IntVector out;
  out.reserve(x.size());
  for (const Ray& r : x.rays()) out.push_back(r.weight * to_integer(eval(f, r.direction).value()));
  return RayFunction(std::move(out));
}

IntMatrix generator_matrix(const WeightedFan& x) {
  IntMatrix m(x.ambient_dim(), x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Ray& r = x.ray(j);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = r.weight * r.direction[i];
  }
  return m;
}

bool is_realizable(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j);
    if (sum != 0) return false;
  }
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols.push_back(m.column(j));
    if (is_zero(cols.back())) return false;
  }
  for (std::size_t a = 0; a < cols.size(); ++a) {
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      if (positive_multiple(cols[a], cols[b])) return false;
    }
  }
  return true;
}

WeightedFan reconstruct_fan(const IntMatrix& m) {
  if (!is_realizable(m)) {
    throw Error(ErrorCode::NotRealizable,
                "matrix is not realizable: a row has nonzero degree, a column is zero, or two "
                "columns are positively proportional");
  }
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto [w, d] = primitive(m.column(j));
    rays.push_back(Ray{std::move(d), std::move(w)});
  }
  return WeightedFan::make(m.rows(), rays);
}

bool ker_eq(const WeightedFan& x, const LaurentPoly& f, const LaurentPoly& g) {
  require_boolean_on(x, f);
  require_boolean_on(x, g);
  for (const Ray& r : x.rays()) {
    if (eval(f, r.direction) != eval(g, r.direction)) return false;
  }
  return true;
}

IntMatrix degree0_coordinates(const IntMatrix& m) {
  if (m.cols() < 2) {
    throw Error(ErrorCode::BadParameters, "degree-0 coordinates need at least two rays");
  }
  IntMatrix out(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j + 1 < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

namespace {

// Integer points w of {L w <= G, row `eq` with equality} by depth-first search
// over the coordinates, each bounded by the LP relaxation with the earlier
// coordinates fixed.
class LatticeSearch {
 public:
  LatticeSearch(const IntMatrix& lattice, const IntVector& bounds, std::size_t eq, long long box)
      : lattice_(lattice), bounds_(bounds), eq_(eq), box_(box) {}

  std::optional<IntVector> run() {
    IntVector w;
    if (descend(w)) return w;
    return std::nullopt;
  }

  bool truncated() const noexcept { return truncated_; }

 private:
  std::vector<lp::Constraint> residual(const IntVector& fixed) const {
    const std::size_t k = lattice_.cols();
    const std::size_t free = k - fixed.size();
    std::vector<lp::Constraint> cons;
    for (std::size_t b = 0; b < lattice_.rows(); ++b) {
      lp::Constraint c;
      c.coeffs.resize(free);
      Rational rhs = bounds_[b];
      for (std::size_t j = 0; j < fixed.size(); ++j) rhs -= Rational(lattice_(b, j) * fixed[j]);
      for (std::size_t j = 0; j < free; ++j) c.coeffs[j] = Rational(lattice_(b, fixed.size() + j));
      c.relation = b == eq_ ? lp::Relation::Equal : lp::Relation::LessEqual;
      c.rhs = std::move(rhs);
      cons.push_back(std::move(c));
    }
    return cons;
  }

  bool descend(IntVector& w) {
    const std::size_t k = lattice_.cols();
    auto cons = residual(w);
    if (w.size() == k) {
      RatVector none;
      return std::all_of(cons.begin(), cons.end(),
                         [&](const lp::Constraint& c) { return lp::satisfies(none, c); });
    }
    RatVector objective(k - w.size());
    objective[0] = 1;
    lp::Solution hi = lp::maximize(objective, cons);
    if (hi.status == lp::Status::Infeasible) return false;
    lp::Solution lo = lp::minimize(objective, cons);

    Integer upper = box_, lower = -box_;
    if (hi.status == lp::Status::Optimal) {
      Integer f = floor_of(hi.value);
      if (f > box_) truncated_ = true;
      upper = std::min(upper, f);
    } else {
      truncated_ = true;
    }
    if (lo.status == lp::Status::Optimal) {
      Integer c = -floor_of(-lo.value);
      if (c < -box_) truncated_ = true;
      lower = std::max(lower, c);
    } else {
      truncated_ = true;
    }
    for (Integer v = lower; v <= upper; ++v) {
      w.push_back(v);
      if (descend(w)) return true;
      w.pop_back();
    }
    return false;
  }

  static Integer floor_of(const Rational& q) {
    Integer n = mp::numerator(q), d = mp::denominator(q);
    Integer f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f;
  }

  const IntMatrix& lattice_;
  const IntVector& bounds_;
  std::size_t eq_;
  Integer box_;
  bool truncated_ = false;
};

}  // namespace

MembershipResult image_membership(const WeightedFan& x, const RayFunction& g, long long bound) {
  if (g.size() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "ray function has " + std::to_string(g.size()) +
                                                  " entries, fan has " + std::to_string(x.size()) +
                                                  " rays");
  }
  if (bound < 1) throw Error(ErrorCode::BadParameters, "search bound must be positive");
  MembershipResult result;
  const std::size_t n = x.ambient_dim();
  if (g.is_bottom()) {
    result.status = MembershipStatus::Member;
    result.witness = LaurentPoly(n);
    return result;
  }

  // Candidate vectors (z.F(b))_b range over the lattice F^T Z^n; search in
  // coordinates w of a basis of it so the search space has no lineality.
  const IntMatrix ft = generator_matrix(x).transpose();
  const HermiteForm h = hnf(ft);
  const std::size_t k = h.rank();
  IntMatrix basis(ft.rows(), k);
  IntMatrix to_z(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t b = 0; b < ft.rows(); ++b) basis(b, j) = h.H(b, j);
    for (std::size_t i = 0; i < n; ++i) to_z(i, j) = h.U(i, j);
  }

  LaurentPoly witness(n);
  bool inconclusive = false;
  for (std::size_t a = 0; a < x.size(); ++a) {
    LatticeSearch search(basis, g.values(), a, bound);
    auto w = search.run();
    if (!w) {
      result.failed_ray = a;
      if (search.truncated()) {
        inconclusive = true;
        continue;
      }
      result.status = MembershipStatus::NonMember;
      return result;
    }
    witness.add_term(to_z.apply(*w), 0);
  }
  if (inconclusive) {
    result.status = MembershipStatus::Inconclusive;
    return result;
  }
  result.status = MembershipStatus::Member;
  result.failed_ray.reset();
  result.witness = std::move(witness);
  return result;
}

std::string SmoothReport::reason(const WeightedFan& x) const {
  switch (failure) {
    case SmoothFailure::None: return "";
    case SmoothFailure::Weight:
      return "weight " + to_string(x.ray(*heavy_ray).weight) + " on ray " + ray_name(x.ray(*heavy_ray));
    case SmoothFailure::Rank:
      return "rank " + std::to_string(rank) + " < " + std::to_string(expected_rank);
    case SmoothFailure::Index: return "lattice index " + to_string(index);
  }
  return "";
}

SmoothReport smooth_report(const WeightedFan& x) {
  if (!check_balancing(x)) throw Error(ErrorCode::NotBalanced, "fan is not balanced");
  SmoothReport report;
  report.expected_rank = x.size() - 1;
  const SmithForm s = snf(degree0_coordinates(generator_matrix(x)));
  report.rank = s.rank();
  report.invariant_factors = s.invariant_factors;
  if (report.rank == report.expected_rank) {
    report.index = 1;
    for (const Integer& f : s.invariant_factors) report.index *= f;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.ray(i).weight > 1) {
      report.failure = SmoothFailure::Weight;
      report.heavy_ray = i;
      return report;
    }
  }
  if (report.rank < report.expected_rank) {
    report.failure = SmoothFailure::Rank;
  } else if (report.index != 1) {
    report.failure = SmoothFailure::Index;
  } else {
    report.smooth = true;
  }
  return report;
}

std::vector<IntVector> linear_relations(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<RatVector> a(rows, RatVector(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rational(m(i, j));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t p = r;
    while (p < rows && a[p][j] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][j];
    for (Rational& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Rational f = a[i][j];
      for (std::size_t c = 0; c < cols; ++c) a[i][c] -= f * a[r][c];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    RatVector t(cols);
    t[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) t[pivot_cols[i]] = -a[i][free];
    Integer den = 1;
    for (const Rational& q : t) den = den / gcd(den, mp::denominator(q)) * mp::denominator(q);
    IntVector v(cols);
    for (std::size_t c = 0; c < cols; ++c) v[c] = mp::numerator(t[c]) * (den / mp::denominator(t[c]));
    basis.push_back(primitive(v).second);
  }
  return basis;
}

}  // namespace tropfan
