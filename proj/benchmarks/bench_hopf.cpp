#include <benchmark/benchmark.h>

#include "hopfcheck/hopfcheck.hpp"

using namespace hopf;

static void BM_AntipodeFqsym(benchmark::State& state) {
  auto h = fqsym(RingSpec::integers(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(antipode(*h));
  state.counters["basis"] = static_cast<double>(h->basis()->size());
}
BENCHMARK(BM_AntipodeFqsym)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_AntipodeAbc(benchmark::State& state) {
  auto h = free_example_abc(RingSpec::integers(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(antipode(*h));
}
BENCHMARK(BM_AntipodeAbc)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_SquaredAntipode(benchmark::State& state) {
  auto h = fqsym(RingSpec::integers(), 5);
  const GradedMap& s = h->antipode();
  for (auto _ : state) benchmark::DoNotOptimize(s.compose(s));
}
BENCHMARK(BM_SquaredAntipode)->Unit(benchmark::kMillisecond);

static void BM_ReducedKernel(benchmark::State& state) {
  auto h = fqsym(RingSpec::rationals(), 5);
  const Tensor2ValuedMap delta = reduced_coproduct_map(*h);
  const auto domain = h->basis()->in_degree(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(delta, domain));
}
BENCHMARK(BM_ReducedKernel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_GradedHopfSuite(benchmark::State& state) {
  auto h = free_example_abc(RingSpec::integers(), 6);
  for (auto _ : state) benchmark::DoNotOptimize(suite_graded_hopf(*h));
}
BENCHMARK(BM_GradedHopfSuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
