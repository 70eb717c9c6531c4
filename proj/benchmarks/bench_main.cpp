#include <benchmark/benchmark.h>

#include <random>

#include "octo/classifier.hpp"
#include "octo/genericity.hpp"
#include "octo/limit_cycle.hpp"
#include "octo/portrait.hpp"
#include "octo/report.hpp"
#include "octo/subcase.hpp"

using namespace octo;

namespace {

CanonicalSystem make(double al, double be, double a10, double a01, double b10, double b01) {
  CanonicalSystem c;
  c.alpha = al;
  c.beta = be;
  c.a10 = a10;
  c.a01 = a01;
  c.b10 = b10;
  c.b01 = b01;
  return c;
}

const CanonicalSystem kCycle = make(0.5, 0.5, 1, 3, -1, -0.5);
const CanonicalSystem kSplit = make(0.5, 0.5, 0.05, 5, 1, -0.5);

void BM_GenericityGate(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<RawSystem> in(1024);
  for (auto& s : in) s = {u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(necessary_condition(in[i++ & 1023]));
}
BENCHMARK(BM_GenericityGate);

void BM_ClassifyCase(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_case(normalize_to_family(kCycle)));
}
BENCHMARK(BM_ClassifyCase);

void BM_TraceSeparatrices(benchmark::State& state) {
  SkeletonOptions opt;
  opt.keep_paths = false;
  for (auto _ : state) benchmark::DoNotOptimize(trace_separatrices(kSplit, opt));
}
BENCHMARK(BM_TraceSeparatrices)->Unit(benchmark::kMillisecond);

void BM_ClassifyFull(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_full(kSplit));
}
BENCHMARK(BM_ClassifyFull)->Unit(benchmark::kMillisecond);

void BM_ReturnMap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(return_map(kCycle, 0.5));
}
BENCHMARK(BM_ReturnMap)->Unit(benchmark::kMicrosecond);

void BM_DetectLimitCycle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(detect_limit_cycle(kCycle));
}
BENCHMARK(BM_DetectLimitCycle)->Unit(benchmark::kMillisecond);

void BM_ClassifySystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify_system(kCycle));
}
BENCHMARK(BM_ClassifySystem)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
