#include <benchmark/benchmark.h>

#include <random>

#include "secmac/dm_region.hpp"
#include "secmac/gaussian_bounds.hpp"
#include "secmac/gaussian_model.hpp"

using namespace secmac;

namespace {

GaussianMacChannel reference_channel() {
  NetworkGeometry g;
  g.pos_enc1 = {0.0, 0.0};
  g.pos_enc2 = {0.5, 0.0};
  g.pos_dest = {1.0, 0.0};
  g.pos_eave = {1.5, 0.0};
  g.gamma = 2.0;
  GaussianMacChannel ch = compile_geometry(g);
  ch.c12 = 4.0;
  return ch;
}

void BM_LowerBound(benchmark::State& state) {
  GaussianMacChannel ch = reference_channel();
  BoundOptions opts;
  opts.grid_steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound(ch, opts).value);
}
BENCHMARK(BM_LowerBound)->Arg(51)->Arg(201)->Arg(401);

void BM_UpperBound(benchmark::State& state) {
  GaussianMacChannel ch = reference_channel();
  for (auto _ : state) benchmark::DoNotOptimize(upper_bound(ch).value);
}
BENCHMARK(BM_UpperBound);

void BM_ConditionalMi(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  JointTable t({k, k, k});
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double sum = 0.0;
  for (auto& v : t.p) {
    v = u(rng);
    sum += v;
  }
  for (auto& v : t.p) v /= sum;
  const int a[] = {0}, b[] = {1}, c[] = {2};
  for (auto _ : state) benchmark::DoNotOptimize(conditional_mi(t, a, b, c));
}
BENCHMARK(BM_ConditionalMi)->Arg(2)->Arg(4)->Arg(8);

void BM_InnerFrontier(benchmark::State& state) {
  DiscreteMemorylessChannel ch = degraded_binary_wiretap(0.1, 0.15);
  FrontierConfig cfg;
  cfg.kind = BoundKind::inner;
  cfg.cards = {1, 1, 2, 1};
  cfg.grid.denominator = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_frontier(ch, cfg).pareto.size());
}
BENCHMARK(BM_InnerFrontier)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
