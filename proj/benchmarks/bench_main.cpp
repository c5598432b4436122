#include <benchmark/benchmark.h>

#include <random>

#include "prymslope/characteristic.hpp"
#include "prymslope/picard.hpp"
#include "prymslope/theta.hpp"
#include "prymslope/toroidal.hpp"

static void BM_ThetaConstant(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto tau = prym::random_period_matrix(g, rng);
  const auto m = prym::Characteristic::zero(g);
  for (auto _ : state) benchmark::DoNotOptimize(prym::theta_constant(m, tau));
}
BENCHMARK(BM_ThetaConstant)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_VanishingCount(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto eta = prym::standard_eta(g);
  const prym::Characteristic mu(g, 1u << (g - 1), 0);
  for (auto _ : state) benchmark::DoNotOptimize(prym::vanishing_count(eta, mu));
}
BENCHMARK(BM_VanishingCount)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_StabilizerOrbits(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto eta = prym::standard_eta(g);
  for (auto _ : state) benchmark::DoNotOptimize(prym::stabilizer_orbits(eta));
}
BENCHMARK(BM_StabilizerOrbits)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_FullMin(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int bound = static_cast<int>(state.range(1));
  std::mt19937_64 rng(5);
  const auto s = prym::random_semi_integral(dim, rng);
  for (auto _ : state) benchmark::DoNotOptimize(prym::full_min(s, bound));
}
BENCHMARK(BM_FullMin)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_DerivePullback(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prym::derive_prym_pullback(g));
}
BENCHMARK(BM_DerivePullback)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
