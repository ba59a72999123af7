#include <benchmark/benchmark.h>

#include "distspec/distance.hpp"
#include "distspec/families.hpp"
#include "distspec/linalg.hpp"
#include "distspec/spectrum.hpp"

namespace {

using namespace distspec;

void BM_AllPairsDistances(benchmark::State& state) {
  const auto g = build_lcr(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_AllPairsDistances)->DenseRange(6, 14, 4);

void BM_CharPoly(benchmark::State& state) {
  const IntMatrix d(all_pairs_distances(build_lcr(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(d));
}
BENCHMARK(BM_CharPoly)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IntMatrix shifted = IntMatrix(all_pairs_distances(build_lcr(n))).shifted(-1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(shifted));
}
BENCHMARK(BM_Rank)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto method = static_cast<SpectrumMethod>(state.range(0));
  const auto g = build_lcr(8);
  const auto sym = lcr_symmetry(8);
  for (auto _ : state) benchmark::DoNotOptimize(distance_spectrum(g, method, &sym));
  state.SetLabel(to_string(method));
}
BENCHMARK(BM_Spectrum)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyLcr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lcr_theorem(n));
}
BENCHMARK(BM_VerifyLcr)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
