#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "loctrig/masc.hpp"
#include "loctrig/orthopoly.hpp"
#include "loctrig/trig_kernel.hpp"

namespace {

void BM_PhiN(benchmark::State& state) {
  const loctrig::TrigKernel kernel(static_cast<int>(state.range(0)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.phi(t));
    t += 1e-3;
  }
}
BENCHMARK(BM_PhiN)->RangeMultiplier(4)->Range(16, 1024);

void BM_SphericalKernel(benchmark::State& state) {
  const loctrig::SphericalKernel kernel(static_cast<int>(state.range(0)),
                                        static_cast<int>(state.range(1)));
  double x = -0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(x));
    x = x > 0.9 ? -0.9 : x + 1e-3;
  }
}
BENCHMARK(BM_SphericalKernel)->ArgsProduct({{32, 128}, {1, 2, 3}});

void BM_SupportScores(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  loctrig::RowMatrix x;
  for (std::size_t i = 0; i < m; ++i) x.push_row(std::vector<double>{g(rng), g(rng)});
  const auto cloud = loctrig::MetricCloud::euclidean(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loctrig::support_scores(cloud, 64));
  }
  state.SetComplexityN(static_cast<long>(m));
}
BENCHMARK(BM_SupportScores)->RangeMultiplier(2)->Range(256, 2048)->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
