#include "godeaux/graded_quotient.hpp"
#include "godeaux/linalg.hpp"
#include "godeaux/scenarios.hpp"
#include "godeaux/subring.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace godeaux;

void BM_RankDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(7);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(static_cast<long>(gen() % 11) - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankDense)->Arg(10)->Arg(25)->Arg(50);

void BM_Z3Hilbert(benchmark::State& state) {
  const auto pres = z3_presentation(Z3Params{0, 0, 0});
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(pres, d));
}
BENCHMARK(BM_Z3Hilbert)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ScSubspaceBasis(benchmark::State& state) {
  const auto pred = sc_predicate();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subspace_basis(pred, m));
}
BENCHMARK(BM_ScSubspaceBasis)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ScPresentation(benchmark::State& state) {
  const auto pred = sc_predicate();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(presentation(pred, d));
}
BENCHMARK(BM_ScPresentation)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
