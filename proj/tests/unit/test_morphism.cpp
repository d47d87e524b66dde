#include "examples.hpp"
#include "random.hpp"

#include "tropfan/morphism.hpp"

#include <doctest.h>

using namespace tropfan;
using namespace tropfan::testing;

namespace {

LaurentPoly var(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }

const IntMatrix kToY{{1, 3}, {2, 1}};

// T d = T' d on every source ray
bool same_on_rays(const FanMorphism& a, const IntMatrix& t) {
  for (const Ray& r : a.source().rays()) {
    if (a.matrix().apply(r.direction) != t.apply(r.direction)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("morphism") {
  TEST_CASE("support preservation") {
    WeightedFan l23 = standard_model(2, 3);
    CHECK(validate_morphism(IntMatrix::identity(2), fan_y(), fan_y()));
    CHECK(validate_morphism(kToY, l23, fan_y()));
    CHECK_FALSE(validate_morphism(IntMatrix::identity(2), l23, fan_z()));
    CHECK(validate_morphism(IntMatrix(2, 2), l23, fan_z()));
    CHECK(error_code([&] { validate_morphism(IntMatrix::identity(3), l23, fan_y()); }) ==
          ErrorCode::DimensionMismatch);
    CHECK(error_code([&] { FanMorphism::make(l23, fan_z(), IntMatrix::identity(2)); }) ==
          ErrorCode::InvalidMorphism);
  }

  TEST_CASE("pullback of polynomials") {
    WeightedFan l23 = standard_model(2, 3);
    FanMorphism id = FanMorphism::make(fan_y(), fan_y(), IntMatrix::identity(2));
    LaurentPoly q = var(2, 0) + LaurentPoly::monomial(iv({-1, 2}), 3);
    CHECK(pullback_poly(id, q) == q);

    FanMorphism mu = FanMorphism::make(l23, fan_y(), kToY);
    CHECK(pullback_poly(mu, var(2, 0)) == LaurentPoly::monomial(iv({1, 3}), 0));
    CHECK(pullback_poly(mu, var(2, 1)) == LaurentPoly::monomial(iv({2, 1}), 0));
    CHECK(pullback_poly(mu, LaurentPoly::monomial(iv({1, 1}), 2)) == LaurentPoly::monomial(iv({3, 4}), 2));
    CHECK(error_code([&] { pullback_poly(mu, var(3, 0)); }) == ErrorCode::DimensionMismatch);
  }

  TEST_CASE("pullback is evaluation at T x") {
    Rng rng(70);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 3);
      WeightedFan x = random_balanced_fan(rng, n, 5, 2);
      FanMorphism mu = random_morphism_from(rng, x, m);
      LaurentPoly q = random_poly(rng, m);
      IntVector p = random_vector(rng, n, 5);
      REQUIRE(eval(pullback_poly(mu, q), p) == eval(q, mu.matrix().apply(p)));
    }
  }

  TEST_CASE("pullback commutes with the evaluation maps") {
    Rng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 3);
      WeightedFan x = random_balanced_fan(rng, n, 5, 2);
      FanMorphism mu = random_morphism_from(rng, x, m);
      LaurentPoly f = random_poly(rng, m, PolyShape{1, 4, 2, 0, 1, true});
      REQUIRE(pullback_evalmap(mu, f) == eval_map(x, pullback_poly(mu, f)));
    }
    FanMorphism id = FanMorphism::make(fan_y(), fan_y(), IntMatrix::identity(2));
    CHECK(pullback_evalmap(id, var(2, 1)) == eval_map(fan_y(), var(2, 1)));
  }

  TEST_CASE("a morphism that kills every ray pulls back to the degree-zero functions") {
    WeightedFan l23 = standard_model(2, 3);
    FanMorphism zero = FanMorphism::make(l23, fan_y(), IntMatrix(2, 2));
    Rng rng(72);
    for (int trial = 0; trial < 50; ++trial) {
      LaurentPoly f = random_poly(rng, 2, PolyShape{1, 4, 2, 0, 1, true});
      REQUIRE(pullback_evalmap(zero, f) == RayFunction(IntVector(3)));
    }
  }

  TEST_CASE("geometric homomorphisms") {
    WeightedFan l23 = standard_model(2, 3);
    FanMorphism mu = FanMorphism::make(l23, fan_y(), kToY);
    HomSpec h = pullback_homspec(mu);
    CHECK(h.source == fan_y());
    CHECK(h.target == l23);
    // columns over the L23 rays (-1,-1), (0,1), (1,0)
    CHECK(h.images == IntMatrix{{-4, 3, 1}, {-3, 1, 2}});
    CHECK(check_geometric(h));

    // inclusion style: each column is a target generator column
    IntMatrix gy = generator_matrix(fan_y());
    CHECK(check_geometric(IntMatrix{{1, 1, -4}, {2, 2, -3}}, gy));
    CHECK(check_geometric(IntMatrix{{0, 2, -4}, {0, 4, -3}}, gy));
    CHECK_FALSE(check_geometric(IntMatrix{{1, 1, -4}, {1, 2, -3}}, gy));
    auto map = geometric_ray_map(IntMatrix{{0, 2, -4}, {0, 4, -3}}, gy);
    REQUIRE(map);
    CHECK_FALSE((*map)[0]);
    CHECK((*map)[1] == fan_y().find(iv({1, 2})));

    HomSpec bad{fan_y(), l23, IntMatrix{{-2, 1, 1}, {-2, 1, 1}}};
    CHECK_FALSE(check_geometric(bad));
    HomSpec wrong_shape{fan_y(), l23, IntMatrix{{-2, 1}, {-2, 1}}};
    CHECK(error_code([&] { check_geometric(wrong_shape); }) == ErrorCode::InvalidHomSpec);
  }

  TEST_CASE("geometricity survives unimodular change of coordinates") {
    Rng rng(73);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 3);
      WeightedFan x = random_balanced_fan(rng, n, 5, 2);
      FanMorphism mu = random_morphism_from(rng, x, m);
      HomSpec h = pullback_homspec(mu);
      REQUIRE(check_geometric(h));
      IntMatrix u = random_unimodular(rng, m);
      REQUIRE(check_geometric(u * h.images, u * generator_matrix(h.source)));
    }
  }

  TEST_CASE("realization examples") {
    WeightedFan l23 = standard_model(2, 3);
    HomSpec h{fan_y(), l23, IntMatrix{{-4, 3, 1}, {-3, 1, 2}}};
    FanMorphism mu = realize_morphism(h);
    CHECK(mu.source() == l23);
    CHECK(mu.target() == fan_y());
    CHECK(mu.matrix() == kToY);

    FanMorphism id = realize_morphism(pullback_homspec(FanMorphism::make(fan_y(), fan_y(), IntMatrix::identity(2))));
    CHECK(same_on_rays(id, IntMatrix::identity(2)));

    CHECK(error_code([&] { realize_morphism(HomSpec{fan_y(), l23, IntMatrix{{-2, 1, 1}, {-2, 1, 1}}}); }) ==
          ErrorCode::NotGeometric);
    CHECK(error_code([&] { realize_morphism(HomSpec{fan_y(), l23, IntMatrix{{1, 0, 0}, {0, 0, 0}}}); }) ==
          ErrorCode::InvalidHomSpec);
    CHECK(error_code([&] { realize_morphism(HomSpec{fan_y(), l23, IntMatrix{{1, 0}, {0, 0}}}); }) ==
          ErrorCode::InvalidHomSpec);
  }

  TEST_CASE("realization recovers the morphism on source rays") {
    Rng rng(74);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 3);
      WeightedFan x = random_balanced_fan(rng, n, 5, 2);
      FanMorphism mu = random_morphism_from(rng, x, m);
      FanMorphism back = realize_morphism(pullback_homspec(mu));
      REQUIRE(back.source() == mu.source());
      REQUIRE(back.target() == mu.target());
      REQUIRE(same_on_rays(back, mu.matrix()));
      REQUIRE(pullback_homspec(back).images == pullback_homspec(mu).images);
    }
  }

  TEST_CASE("realization in the smooth case follows the ray bijection") {
    Rng rng(75);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = rng.uniform(2, 3);
      WeightedFan l = standard_model(n, n + 1);
      IntMatrix u = random_unimodular(rng, n);
      WeightedFan x = reconstruct_fan(u * generator_matrix(l));
      FanMorphism sigma = FanMorphism::make(l, x, u);
      FanMorphism back = realize_morphism(pullback_homspec(sigma));
      REQUIRE(back.matrix() == u);
      REQUIRE(ray_map(back) == ray_map(sigma));
    }
  }

  TEST_CASE("composition") {
    WeightedFan l23 = standard_model(2, 3);
    FanMorphism a = FanMorphism::make(l23, fan_y(), kToY);
    FanMorphism id = FanMorphism::make(fan_y(), fan_y(), IntMatrix::identity(2));
    CHECK(compose(id, a).matrix() == kToY);
    CHECK(error_code([&] { compose(a, a); }) == ErrorCode::CompositionMismatch);
  }

  TEST_CASE("pullback is contravariant and composition associative") {
    Rng rng(76);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = rng.uniform(1, 3), m = rng.uniform(1, 3), k = rng.uniform(1, 3);
      WeightedFan x = random_balanced_fan(rng, n, 5, 2);
      FanMorphism mu1 = random_morphism_from(rng, x, m);
      FanMorphism mu2 = random_morphism_from(rng, mu1.target(), k);
      FanMorphism mu3 = random_morphism_from(rng, mu2.target(), rng.uniform(1, 2));
      FanMorphism c = compose(mu2, mu1);
      LaurentPoly q = random_poly(rng, k);
      REQUIRE(fn_eq(pullback_poly(c, q), pullback_poly(mu1, pullback_poly(mu2, q))).equal);
      REQUIRE(compose(mu3, c).matrix() == compose(compose(mu3, mu2), mu1).matrix());
    }
  }

  TEST_CASE("ray map") {
    WeightedFan l23 = standard_model(2, 3);
    FanMorphism a = FanMorphism::make(l23, fan_y(), kToY);
    auto rm = ray_map(a);
    REQUIRE(rm.size() == 3);
    // (-1,-1) -> (-4,-3), (0,1) -> (3,1), (1,0) -> (1,2)
    CHECK(rm[0] == fan_y().find(iv({-4, -3})));
    CHECK(rm[1] == fan_y().find(iv({3, 1})));
    CHECK(rm[2] == fan_y().find(iv({1, 2})));

    Rng rng(77);
    for (int trial = 0; trial < 100; ++trial) {
      WeightedFan x = random_balanced_fan(rng, rng.uniform(1, 3), 5, 2);
      FanMorphism mu = random_morphism_from(rng, x, rng.uniform(1, 3));
      auto map = ray_map(mu);
      HomSpec h = pullback_homspec(mu);
      auto geo = geometric_ray_map(h.images, generator_matrix(h.source));
      REQUIRE(geo);
      for (std::size_t i = 0; i < map.size(); ++i) REQUIRE(map[i] == (*geo)[i]);
    }
  }
}
