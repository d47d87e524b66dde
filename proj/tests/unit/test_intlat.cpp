#include "oracles.hpp"
#include "random.hpp"

#include "tropfan/error.hpp"
#include "tropfan/intlat.hpp"

#include <doctest.h>

using namespace tropfan;
using namespace tropfan::testing;

namespace {

bool smith_shape_ok(const SmithForm& s) {
  const IntMatrix& d = s.D;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (i != j && d(i, j) != 0) return false;
    }
  }
  const std::size_t r = s.rank();
  for (std::size_t k = 0; k < std::min(d.rows(), d.cols()); ++k) {
    if (k < r) {
      if (d(k, k) != s.invariant_factors[k] || d(k, k) <= 0) return false;
      if (k + 1 < r && s.invariant_factors[k + 1] % s.invariant_factors[k] != 0) return false;
    } else if (d(k, k) != 0) {
      return false;
    }
  }
  return true;
}

bool hermite_shape_ok(const IntMatrix& a, const HermiteForm& h) {
  if (a * h.U != h.H || !is_unimodular(h.U)) return false;
  std::size_t prev = 0;
  for (std::size_t k = 0; k < h.H.cols(); ++k) {
    if (k >= h.rank()) {
      if (!is_zero(h.H.column(k))) return false;
      continue;
    }
    const std::size_t p = h.pivot_rows[k];
    if (k > 0 && p <= prev) return false;
    prev = p;
    for (std::size_t i = 0; i < p; ++i) {
      if (h.H(i, k) != 0) return false;
    }
    const Integer& pivot = h.H(p, k);
    if (pivot <= 0) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (h.H(p, j) < 0 || h.H(p, j) >= pivot) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("intlat") {
  TEST_CASE("matrix construction rejects empty shapes") {
    CHECK_THROWS_AS(IntMatrix(0, 2), Error);
    CHECK_THROWS_AS(IntMatrix(2, 0), Error);
    IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(m.apply({Integer(1), Integer(1)}) == IntVector{3, 7});
    CHECK_THROWS_AS(m.apply({Integer(1)}), Error);
  }

  TEST_CASE("determinant and unimodular inverse") {
    CHECK(determinant(IntMatrix{{1, 3}, {2, 1}}) == -5);
    CHECK(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {1, 1, 4}}) == 24);
    IntMatrix u{{2, 1}, {1, 1}};
    CHECK(is_unimodular(u));
    CHECK(u * inverse_unimodular(u) == IntMatrix::identity(2));
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), Error);
  }

  TEST_CASE("snf examples") {
    SmithForm id = snf(IntMatrix::identity(3));
    CHECK(id.D == IntMatrix::identity(3));
    CHECK(id.invariant_factors == IntVector{1, 1, 1});

    SmithForm y = snf(IntMatrix{{1, 3}, {2, 1}});
    CHECK(y.invariant_factors == IntVector{1, 5});
    SmithForm e = snf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(e.invariant_factors == IntVector{2, 4});
    CHECK(e.P * IntMatrix{{2, 4}, {6, 8}} * e.Q == e.D);

    SmithForm zero = snf(IntMatrix(2, 3));
    CHECK(zero.rank() == 0);
    CHECK(zero.D.is_zero());
  }

  TEST_CASE("snf contract on random matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t m = rng.uniform(1, 6), n = rng.uniform(1, 6);
      IntMatrix a = random_matrix(rng, m, n, 100);
      if (trial % 5 == 0) {
        // low rank: product of thin factors
        const std::size_t k = rng.uniform(1, std::min(m, n));
        a = random_matrix(rng, m, k, 6) * random_matrix(rng, k, n, 6);
      }
      SmithForm s = snf(a);
      REQUIRE(s.P * a * s.Q == s.D);
      REQUIRE(is_unimodular(s.P));
      REQUIRE(is_unimodular(s.Q));
      REQUIRE(smith_shape_ok(s));
    }
  }

  TEST_CASE("snf agrees with determinantal divisors") {
    Rng rng(12);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4);
      IntMatrix a = random_matrix(rng, m, n, trial % 2 ? 4 : 30);
      CHECK(snf(a).invariant_factors == determinantal_invariant_factors(a));
    }
  }

  TEST_CASE("snf is invariant under unimodular change") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = rng.uniform(1, 5), n = rng.uniform(1, 5);
      IntMatrix a = random_matrix(rng, m, n, 20);
      IntMatrix b = random_unimodular(rng, m) * a * random_unimodular(rng, n);
      CHECK(snf(a).D == snf(b).D);
    }
  }

  TEST_CASE("hnf convention") {
    HermiteForm h = hnf(IntMatrix{{2, 4}, {6, 8}});
    CHECK(h.H == IntMatrix{{2, 0}, {2, 4}});
    CHECK(h.pivot_rows == std::vector<std::size_t>{0, 1});

    HermiteForm g = hnf(IntMatrix{{0, 0}, {3, 6}});
    CHECK(g.H == IntMatrix{{0, 0}, {3, 0}});
    CHECK(g.rank() == 1);

    Rng rng(14);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t m = rng.uniform(1, 5), n = rng.uniform(1, 5);
      IntMatrix a = random_matrix(rng, m, n, trial % 3 ? 9 : 1);
      REQUIRE(hermite_shape_ok(a, hnf(a)));
    }
  }

  TEST_CASE("hnf is canonical for the column lattice") {
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4);
      IntMatrix a = random_matrix(rng, m, n, 8);
      CHECK(hnf(a).H == hnf(a * random_unimodular(rng, n)).H);
    }
  }

  TEST_CASE("lattice_solve examples") {
    IntVector b{4, -7, 2};
    CHECK(lattice_solve(IntMatrix::identity(3), b) == b);
    CHECK_FALSE(lattice_solve(IntMatrix{{2}}, {Integer(3)}).has_value());
    CHECK(lattice_solve(IntMatrix{{1, 2}, {3, 1}}, {Integer(1), Integer(3)}) == IntVector{1, 0});
    CHECK_THROWS_AS(lattice_solve(IntMatrix{{1, 2}}, {Integer(1), Integer(3)}), Error);
  }

  TEST_CASE("lattice_solve agrees with oracles on small systems") {
    Rng rng(16);
    for (int trial = 0; trial < 1500; ++trial) {
      const std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3);
      IntMatrix a = random_matrix(rng, m, n, 5);
      IntVector b = trial % 2 ? random_vector(rng, m, 5) : a.apply(random_vector(rng, n, 3));
      auto z = lattice_solve(a, b);
      if (z) REQUIRE(a.apply(*z) == b);
      REQUIRE(z.has_value() == integer_solvable_oracle(a, b));
      if (enumerate_solution(a, b, 4)) REQUIRE(z.has_value());
    }
  }

  TEST_CASE("complete_unimodular") {
    CHECK(complete_unimodular(IntMatrix{{1}, {0}}) == IntMatrix::identity(2));
    IntMatrix c = complete_unimodular(IntMatrix{{2}, {1}});
    CHECK(c.column(0) == IntVector{2, 1});
    CHECK(abs(determinant(c)) == 1);
    CHECK_THROWS_AS(complete_unimodular(IntMatrix{{2}, {4}}), Error);
    CHECK_THROWS_AS(complete_unimodular(IntMatrix{{1, 0, 0}}), Error);

    Rng rng(17);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t m = rng.uniform(1, 5), n = rng.uniform(1, m);
      IntMatrix a = random_matrix(rng, m, n, trial % 2 ? 2 : 6);
      SmithForm s = snf(a);
      const bool pattern = s.rank() == n &&
                           std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                                       [](const Integer& f) { return f == 1; });
      try {
        IntMatrix c = complete_unimodular(a);
        REQUIRE(pattern);
        REQUIRE(abs(determinant(c)) == 1);
        for (std::size_t j = 0; j < n; ++j) REQUIRE(c.column(j) == a.column(j));
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::NotLeftInvertible);
        REQUIRE_FALSE(pattern);
      }
    }
  }

  TEST_CASE("unimodular_transport examples") {
    IntMatrix a{{1, 2}, {3, 4}, {5, 6}};
    CHECK(unimodular_transport(a, a) * a == a);
    IntMatrix p = unimodular_transport(IntMatrix{{1, 0}, {0, 1}, {0, 0}}, IntMatrix{{0, 1}, {1, 0}, {0, 0}});
    CHECK(p == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(unimodular_transport(IntMatrix(2, 2), IntMatrix(2, 2)) == IntMatrix::identity(2));

    try {
      unimodular_transport(IntMatrix{{1}, {0}}, IntMatrix{{2}, {0}});
      FAIL("expected NoMutualFactorization");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NoMutualFactorization);
    }
  }

  TEST_CASE("unimodular_transport on random unimodular images") {
    Rng rng(18);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = rng.uniform(1, 5), n = rng.uniform(1, 4);
      IntMatrix a = random_matrix(rng, m, n, 5);
      if (trial % 3 == 0) a = random_matrix(rng, m, 1, 3) * random_matrix(rng, 1, n, 3);
      IntMatrix b = random_unimodular(rng, m) * a;
      IntMatrix t = unimodular_transport(a, b);
      REQUIRE(t * a == b);
      REQUIRE(abs(determinant(t)) == 1);
      IntMatrix back = unimodular_transport(b, a);
      REQUIRE(back * b == a);
    }
  }

  TEST_CASE("row lattice basis spans the row lattice") {
    IntMatrix a{{2, 4}, {1, 2}, {0, 0}};
    auto basis = row_lattice_basis(a);
    REQUIRE(basis.size() == 1);
    CHECK((basis[0] == IntVector{1, 2} || basis[0] == IntVector{-1, -2}));
    CHECK(row_lattice_basis(IntMatrix(2, 2)).empty());
  }
}
