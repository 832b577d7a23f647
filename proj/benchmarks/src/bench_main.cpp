#include <benchmark/benchmark.h>

#include <tuple>

#include "stabur/stabur.hpp"

using namespace stabur;

namespace {

void BM_PauliMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  const PauliOperator p = random_pauli(n, rng);
  const PauliOperator q = random_pauli(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(p, q));
}
BENCHMARK(BM_PauliMultiply)->Arg(4)->Arg(16)->Arg(64);

void BM_IntersectionSymplectic(benchmark::State& state) {
  SplitMix64 rng(2);
  const auto [s, t] = random_group_pair(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_basis(s, t));
}
BENCHMARK(BM_IntersectionSymplectic)->DenseRange(4, 16, 4);

void BM_IntersectionEnumeration(benchmark::State& state) {
  SplitMix64 rng(2);
  const auto [s, t] = random_group_pair(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(intersect_by_enumeration(s, t));
}
BENCHMARK(BM_IntersectionEnumeration)->DenseRange(4, 16, 4);

void BM_AmplitudeTransform(benchmark::State& state) {
  SplitMix64 rng(3);
  const Graph g = random_graph(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(amplitude_transform(g));
}
BENCHMARK(BM_AmplitudeTransform)->DenseRange(4, 16, 4);

void BM_AmplitudeRecurrenceAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(3);
  const Graph g = random_graph(n, rng);
  for (auto _ : state) {
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) benchmark::DoNotOptimize(amplitude_recurrence(y, g));
  }
}
BENCHMARK(BM_AmplitudeRecurrenceAll)->DenseRange(4, 12, 4);

void BM_Matching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(4);
  auto [s, t] = random_group_pair(n, rng);
  while (intersection_basis(s, t).c == n) std::tie(s, t) = random_group_pair(n, rng);
  const SymmetricDifference m = symmetric_difference(s, t);
  for (auto _ : state) benchmark::DoNotOptimize(perfect_matching(m));
}
BENCHMARK(BM_Matching)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
