#include "examples.hpp"
#include "random.hpp"

#include "tropfan/error.hpp"
#include "tropfan/fan.hpp"

#include <algorithm>
#include <doctest.h>

using namespace tropfan;
using namespace tropfan::testing;

TEST_SUITE("fan") {
  TEST_CASE("primitive") {
    CHECK(primitive(iv({2, 4})) == std::pair{Integer(2), iv({1, 2})});
    CHECK(primitive(iv({-4, -3})) == std::pair{Integer(1), iv({-4, -3})});
    CHECK(primitive(iv({0, 3})) == std::pair{Integer(3), iv({0, 1})});
    CHECK(error_code([] { primitive(iv({0, 0})); }) == ErrorCode::ZeroVector);
  }

  TEST_CASE("balancing") {
    CHECK(check_balancing(standard_model(2, 3)));
    CHECK(check_balancing(fan_y()));
    CHECK_FALSE(check_balancing(WeightedFan::make(2, {Ray{iv({1, 0}), 1}})));
    // weight 2 on (-1,0) balances (2,0) read as (1,0) with weight 2
    CHECK(check_balancing(WeightedFan::make(2, {Ray{iv({2, 0}), 1}, Ray{iv({-1, 0}), 2}})));
  }

  TEST_CASE("standard models") {
    WeightedFan l23 = standard_model(2, 3);
    CHECK(l23 == WeightedFan::make(2, {Ray{iv({1, 0}), 1}, Ray{iv({0, 1}), 1}, Ray{iv({-1, -1}), 1}}));
    CHECK(standard_model(3, 2) == WeightedFan::make(3, {Ray{iv({1, 0, 0}), 1}, Ray{iv({-1, 0, 0}), 1}}));
    CHECK(error_code([] { standard_model(2, 4); }) == ErrorCode::BadParameters);
    CHECK(error_code([] { standard_model(2, 1); }) == ErrorCode::BadParameters);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t r = 2; r <= n + 1; ++r) {
        WeightedFan x = standard_model(n, r);
        REQUIRE(x.size() == r);
        REQUIRE(check_balancing(x));
      }
    }
  }

  TEST_CASE("loader normalizes and rejects bad input") {
    WeightedFan x = WeightedFan::make(2, {Ray{iv({2, 4}), 3}, Ray{iv({-1, -2}), 6}});
    REQUIRE(x.size() == 2);
    REQUIRE(x.find(iv({1, 2})));
    CHECK(x.ray(*x.find(iv({1, 2}))).weight == 6);
    CHECK_FALSE(x.find(iv({2, 4})));

    CHECK(error_code([] { WeightedFan::make(2, {Ray{iv({1, 0}), 1}, Ray{iv({2, 0}), 1}}); }) ==
          ErrorCode::DuplicateRay);
    CHECK(error_code([] { WeightedFan::make(2, {Ray{iv({1, 0, 0}), 1}}); }) == ErrorCode::DimensionMismatch);
    CHECK(error_code([] { WeightedFan::make(2, {Ray{iv({0, 0}), 1}}); }) == ErrorCode::ZeroVector);
    CHECK(error_code([] { WeightedFan::make(2, {Ray{iv({1, 0}), 0}}); }) == ErrorCode::BadParameters);
    CHECK(error_code([] { WeightedFan::make(2, {}); }) == ErrorCode::BadParameters);
    CHECK(error_code([] { WeightedFan::make(0, {Ray{IntVector{}, 1}}); }) == ErrorCode::BadParameters);
  }

  TEST_CASE("equality ignores input order") {
    Rng rng(50);
    for (int trial = 0; trial < 100; ++trial) {
      WeightedFan x = random_balanced_fan(rng, rng.uniform(1, 4), 6, 3);
      std::vector<Ray> rays = x.rays();
      std::reverse(rays.begin(), rays.end());
      REQUIRE(WeightedFan::make(x.ambient_dim(), rays) == x);
      REQUIRE(std::is_sorted(x.rays().begin(), x.rays().end(),
                             [](const Ray& a, const Ray& b) { return a.direction < b.direction; }));
    }
  }

  TEST_CASE("support membership") {
    WeightedFan l23 = standard_model(2, 3);
    CHECK(support_contains(l23, iv({0, 0})));
    CHECK(support_contains(fan_y(), iv({2, 4})));
    CHECK_FALSE(support_contains(l23, iv({1, 1})));
    CHECK_FALSE(support_contains(l23, iv({-1, 0})));
    CHECK(support_contains(l23, RatVector{Rational(-1, 3), Rational(-1, 3)}));
    CHECK_FALSE(support_contains(l23, RatVector{Rational(1, 3), Rational(1, 2)}));
    CHECK(ray_containing(fan_y(), iv({-8, -6})) == fan_y().find(iv({-4, -3})));
    CHECK_FALSE(ray_containing(fan_y(), iv({0, 0})));
  }

  TEST_CASE("support membership by scaling") {
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
      WeightedFan x = random_balanced_fan(rng, rng.uniform(1, 4), 5, 2);
      const Ray& r = x.ray(rng.index(x.size()));
      IntVector v = r.direction;
      const long long t = rng.uniform(1, 5);
      for (Integer& c : v) c *= t;
      REQUIRE(support_contains(x, v));
      IntVector neg = r.direction;
      for (Integer& c : neg) c = -c;
      REQUIRE(support_contains(x, neg) == x.find(neg).has_value());
    }
  }

  TEST_CASE("ray names") {
    CHECK(ray_name(Ray{iv({1, -2}), 1}) == "(1,-2)");
    CHECK(ray_name(Ray{iv({0, 0, 7}), 3}) == "(0,0,7)");
  }
}
