#include <benchmark/benchmark.h>

#include "vknot/fuzz.hpp"
#include "vknot/invariants.hpp"

using namespace vknot;

namespace {

LongDiagram sample(std::int64_t n) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919);
  return random_diagram(rng, static_cast<int>(n));
}

void BM_HomologyParallel(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_data(d));
  state.SetComplexityN(state.range(0));
}

void BM_HomologySerial(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_data_serial(d));
  state.SetComplexityN(state.range(0));
}

void BM_HomologyReference(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(homology_data_reference(d));
  state.SetComplexityN(state.range(0));
}

void BM_PolysParallel(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  const HomologyData h = homology_data(d);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_polys(d, h, true));
}

void BM_PolysSerial(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  const HomologyData h = homology_data_serial(d);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_polys(d, h, false));
}

void BM_Bundle(benchmark::State& state) {
  const LongDiagram d = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_polys(d));
}

void BM_FuzzParallel(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.iterations = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fuzz(cfg));
}

void BM_FuzzSerial(benchmark::State& state) {
  FuzzConfig cfg;
  cfg.iterations = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_serial(cfg));
}

}  // namespace

BENCHMARK(BM_HomologyParallel)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_HomologySerial)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_HomologyReference)->RangeMultiplier(4)->Range(16, 256)->Complexity();
BENCHMARK(BM_PolysParallel)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_PolysSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_Bundle)->Arg(100)->Arg(1000);
BENCHMARK(BM_FuzzParallel)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FuzzSerial)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
