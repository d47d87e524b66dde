#include "tropfan/morphism.hpp"

#include "tropfan/error.hpp"

namespace tropfan {

namespace {

void require_shape(const IntMatrix& t, const WeightedFan& source, const WeightedFan& target) {
  if (t.rows() != target.ambient_dim() || t.cols() != source.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "morphism matrix must be " + std::to_string(target.ambient_dim()) + "x" +
                    std::to_string(source.ambient_dim()) + ", got " + std::to_string(t.rows()) +
                    "x" + std::to_string(t.cols()));
  }
}

bool positive_multiple(const IntVector& v, const IntVector& g) {
  Integer gv = content(v), gg = content(g);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] * gg != g[i] * gv) return false;
  }
  return true;
}

}  // namespace

bool validate_morphism(const IntMatrix& t, const WeightedFan& source, const WeightedFan& target) {
  require_shape(t, source, target);
  for (const Ray& r : source.rays()) {
    if (!support_contains(target, t.apply(r.direction))) return false;
  }
  return true;
}

FanMorphism FanMorphism::make(WeightedFan source, WeightedFan target, IntMatrix matrix) {
  if (!validate_morphism(matrix, source, target)) {
    throw Error(ErrorCode::InvalidMorphism, "matrix maps a source ray outside the target support");
  }
  return FanMorphism(std::move(source), std::move(target), std::move(matrix));
}

LaurentPoly pullback_poly(const FanMorphism& mu, const LaurentPoly& q) {
  const IntMatrix& t = mu.matrix();
  if (q.num_vars() != t.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "pullback: polynomial has " +
                                                  std::to_string(q.num_vars()) + " variables, need " +
                                                  std::to_string(t.rows()));
  }
  const IntMatrix tt = t.transpose();
  LaurentPoly out(t.cols());
  for (const auto& [v, a] : q.terms()) out.add_term(tt.apply(v), a);
  return out;
}

RayFunction pullback_evalmap(const FanMorphism& mu, const LaurentPoly& f) {
  if (f.num_vars() != mu.target().ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "pullback: polynomial lives on the wrong fan");
  }
  if (!f.is_boolean()) throw Error(ErrorCode::NonBooleanInput, "pullback needs a Boolean polynomial");
  const WeightedFan& x = mu.source();
  if (f.is_bottom()) return RayFunction::bottom(x.size());
  IntVector out;
  for (const Ray& r : x.rays()) {
    out.push_back(r.weight *
                  boost::multiprecision::numerator(eval(f, mu.matrix().apply(r.direction)).value()));
  }
  return RayFunction(std::move(out));
}

HomSpec pullback_homspec(const FanMorphism& mu) {
  return HomSpec{mu.target(), mu.source(), mu.matrix() * generator_matrix(mu.source())};
}

std::optional<std::vector<std::optional<std::size_t>>> geometric_ray_map(
    const IntMatrix& images, const IntMatrix& generators) {
  if (images.rows() != generators.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "image and generator columns differ in length");
  }
  std::vector<std::optional<std::size_t>> map;
  for (std::size_t c = 0; c < images.cols(); ++c) {
    const IntVector v = images.column(c);
    if (is_zero(v)) {
      map.emplace_back();
      continue;
    }
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < generators.cols() && !hit; ++j) {
      const IntVector g = generators.column(j);
      if (!is_zero(g) && positive_multiple(v, g)) hit = j;
    }
    if (!hit) return std::nullopt;
    map.push_back(hit);
  }
  return map;
}

bool check_geometric(const IntMatrix& images, const IntMatrix& generators) {
  return geometric_ray_map(images, generators).has_value();
}

namespace {

void require_homspec_shape(const HomSpec& h) {
  if (h.images.rows() != h.source.ambient_dim() || h.images.cols() != h.target.size()) {
    throw Error(ErrorCode::InvalidHomSpec,
                "homomorphism needs " + std::to_string(h.source.ambient_dim()) +
                    " images with one value per target ray (" + std::to_string(h.target.size()) +
                    ")");
  }
}

}  // namespace

bool check_geometric(const HomSpec& h) {
  require_homspec_shape(h);
  return check_geometric(h.images, generator_matrix(h.source));
}

FanMorphism realize_morphism(const HomSpec& h) {
  require_homspec_shape(h);
  for (std::size_t i = 0; i < h.images.rows(); ++i) {
    Integer deg = 0;
    for (std::size_t j = 0; j < h.images.cols(); ++j) deg += h.images(i, j);
    if (deg != 0) {
      throw Error(ErrorCode::InvalidHomSpec,
                  "image " + std::to_string(i + 1) + " has degree " + to_string(deg) + ", not 0");
    }
  }
  if (!check_geometric(h)) {
    throw Error(ErrorCode::NotGeometric, "some target ray is not sent onto a ray of the source fan");
  }
  const WeightedFan& x = h.target;
  if (!check_balancing(x)) throw Error(ErrorCode::NotBalanced, "target fan is not balanced");

  // Row i of T solves t_i . F = H_i; on degree-0 functions the last
  // coordinate is determined by the others.
  const IntMatrix f = generator_matrix(x);
  const IntMatrix system = degree0_coordinates(f).transpose();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < h.images.rows(); ++i) {
    IntVector rhs = h.images.row(i);
    rhs.pop_back();
    auto t = lattice_solve(system, rhs);
    if (!t) {
      throw Error(ErrorCode::NoIntegerSolution,
                  "image " + std::to_string(i + 1) + " is not an integer combination of generators");
    }
    rows.push_back(std::move(*t));
  }
  IntMatrix t = IntMatrix::from_rows(rows);
  if (t * f != h.images || !validate_morphism(t, x, h.source)) {
    throw Error(ErrorCode::SupportViolation, "solved matrix does not map the fan into the source");
  }
  return FanMorphism::make(x, h.source, std::move(t));
}

FanMorphism compose(const FanMorphism& mu2, const FanMorphism& mu1) {
  if (!(mu1.target() == mu2.source())) {
    throw Error(ErrorCode::CompositionMismatch, "target of the first morphism is not the source of "
                                                "the second");
  }
  return FanMorphism::make(mu1.source(), mu2.target(), mu2.matrix() * mu1.matrix());
}

std::vector<std::optional<std::size_t>> ray_map(const FanMorphism& mu) {
  std::vector<std::optional<std::size_t>> out;
  for (const Ray& r : mu.source().rays()) {
    out.push_back(ray_containing(mu.target(), mu.matrix().apply(r.direction)));
  }
  return out;
}

}  // namespace tropfan
