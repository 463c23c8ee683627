// Serial references against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>

#include "rpk/factory.hpp"
#include "rpk/kernel.hpp"
#include "rpk/rainbow.hpp"

using namespace rpk;

namespace {

ArcColouredDigraph reach_input(int n) {
  std::mt19937_64 rng(5);
  return random_coloured_digraph(n, 6, 0.5, rng);
}

Digraph kernel_input(int n) {
  std::mt19937_64 rng(6);
  return random_kp_digraph(n, 0.06, 0.3, rng);
}

void BM_ReachSerial(benchmark::State& state) {
  auto d = reach_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rainbow_reachability_serial(d));
}

void BM_ReachParallel(benchmark::State& state) {
  auto d = reach_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rainbow_reachability(d));
}

void BM_KernelsSerial(benchmark::State& state) {
  auto g = kernel_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_kernels_serial(g));
}

void BM_KernelsParallel(benchmark::State& state) {
  auto g = kernel_input(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_kernels(g));
}

}  // namespace

BENCHMARK(BM_ReachSerial)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReachParallel)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KernelsSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_KernelsParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
