#include <benchmark/benchmark.h>

#include <random>

#include "generators.hpp"
#include "snccoh/localmodel.hpp"
#include "snccoh/snc.hpp"
#include "snccoh/toric.hpp"

using namespace snccoh;

static void BM_Rank(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const RationalMatrix m = gen::random_matrix(rng, n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(16)->Arg(32)->Arg(64);

static void BM_SphereBetti(benchmark::State& state) {
  const auto k = SimplicialComplex::simplex_boundary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(k));
}
BENCHMARK(BM_SphereBetti)->DenseRange(4, 8, 2);

static void BM_IntegralCohomology(benchmark::State& state) {
  const auto k = SimplicialComplex::simplex_boundary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integral_cohomology(k));
}
BENCHMARK(BM_IntegralCohomology)->DenseRange(4, 7);

static void BM_RandomPresheaf(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto k = SimplicialComplex::simplex_boundary(static_cast<std::size_t>(state.range(0)));
  const Presheaf v = gen::random_quotient_presheaf(rng, k, 4);
  for (auto _ : state) benchmark::DoNotOptimize(presheaf_cohomology(v));
}
BENCHMARK(BM_RandomPresheaf)->DenseRange(4, 6);

static void BM_SpectralPages(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<Bicomplex> pool;
  for (int i = 0; i < 32; ++i) pool.push_back(gen::random_bicomplex(rng).bicomplex);
  std::size_t i = 0;
  for (auto _ : state) {
    const Bicomplex& b = pool[i++ % pool.size()];
    benchmark::DoNotOptimize(page(b, PageIndex::Two));
    benchmark::DoNotOptimize(page_infinity(b));
  }
}
BENCHMARK(BM_SpectralPages);

static void BM_LocalModel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LocalModelSpec spec{n, {}, {}, 8};
  for (std::size_t c = 1; c <= n; ++c) {
    spec.components.push_back(c);
    spec.multiplicities.push_back(static_cast<unsigned>(c % 3 + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma31(spec));
}
BENCHMARK(BM_LocalModel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ToricBoundary(benchmark::State& state) {
  const Fan f = projective_space_fan(static_cast<std::size_t>(state.range(0)));
  std::vector<std::size_t> all(f.rays.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(toric_snc_cohomology(f, all));
}
BENCHMARK(BM_ToricBoundary)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
