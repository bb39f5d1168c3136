#include <benchmark/benchmark.h>

#include <cmath>

#include "floquet_ising/bdg.hpp"
#include "floquet_ising/corr.hpp"
#include "floquet_ising/entropy.hpp"
#include "floquet_ising/floquet.hpp"
#include "floquet_ising/kintegral.hpp"

using namespace floquet_ising;

static void KModePeriodPropagator(benchmark::State& state) {
  const DriveParams p(2.3, 1.0, 4.0);
  const double dt = p.tau() / state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(period_propagator(p, 1.1, dt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(KModePeriodPropagator)->RangeMultiplier(2)->Range(1024, 8192);

static void FloquetGrid(benchmark::State& state) {
  const DriveParams p(2.3, 1.0, 4.0);
  const KGrid g = build_k_grid({static_cast<int>(state.range(0)), Boundary::SpinPBC});
  for (auto _ : state) benchmark::DoNotOptimize(analyze_grid(p, g, {.periodic_components = false}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(FloquetGrid)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond)->Complexity();

static void RealSpacePeriodPropagator(benchmark::State& state) {
  const DriveParams p(2.3, 1.0, 4.0);
  const ChainSpec chain{static_cast<int>(state.range(0)), Boundary::SpinPBC};
  for (auto _ : state) benchmark::DoNotOptimize(StroboscopicEvolver(chain, p, 4096).propagator());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(RealSpacePeriodPropagator)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

static void AsymptoticToeplitzEntropy(benchmark::State& state) {
  const DriveParams p(2.3, 1.0, 4.0);
  const auto modes = analyze_grid(p, build_k_grid({1000, Boundary::SpinPBC}), {});
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subchain_entropy(asymptotic_toeplitz(modes, l, 0.0)));
  state.SetComplexityN(l);
}
BENCHMARK(AsymptoticToeplitzEntropy)->RangeMultiplier(2)->Range(20, 160)->Unit(benchmark::kMillisecond)->Complexity();

static void KIntegral(benchmark::State& state) {
  const KGrid g = build_k_grid({static_cast<int>(state.range(0)), Boundary::SpinPBC});
  std::vector<double> f;
  for (double k : g.momenta) f.push_back(std::exp(std::cos(k)) * std::sin(3 * k));
  for (auto _ : state) benchmark::DoNotOptimize(k_integral(g.momenta, f, Kernel::Sin, 7, Parity::Odd));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(KIntegral)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

BENCHMARK_MAIN();
