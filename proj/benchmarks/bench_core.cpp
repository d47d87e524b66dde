#include "tropfan/evalmap.hpp"
#include "tropfan/intlat.hpp"
#include "tropfan/laurent.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tropfan;

namespace {

IntMatrix random_matrix(std::mt19937_64& gen, std::size_t n, long long bound) {
  std::uniform_int_distribution<long long> dist(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(gen);
  }
  return m;
}

LaurentPoly random_boolean_poly(std::mt19937_64& gen, std::size_t n, std::size_t terms) {
  std::uniform_int_distribution<long long> dist(-3, 3);
  LaurentPoly p(n);
  while (p.size() < terms) {
    IntVector u(n);
    for (Integer& c : u) c = dist(gen);
    p.add_term(std::move(u), 0);
  }
  return p;
}

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 gen(1);
  IntMatrix a = random_matrix(gen, static_cast<std::size_t>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf)->DenseRange(2, 8, 2);

void BM_Canonicalize(benchmark::State& state, LpEngine engine) {
  std::mt19937_64 gen(2);
  LaurentPoly p = random_boolean_poly(gen, 3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(p, engine));
}
BENCHMARK_CAPTURE(BM_Canonicalize, fourier_motzkin, LpEngine::FourierMotzkin)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK_CAPTURE(BM_Canonicalize, simplex, LpEngine::Simplex)->Arg(4)->Arg(8)->Arg(16);

void BM_IsSmooth(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  WeightedFan x = standard_model(n, n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth(x));
}
BENCHMARK(BM_IsSmooth)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
