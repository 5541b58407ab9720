#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "posetval/catalog.h"
#include "posetval/group.h"
#include "posetval/metric.h"
#include "posetval/poset.h"
#include "posetval/search.h"
#include "posetval/valuation.h"

namespace posetval {
namespace {

// Random DAG pairs over n elements, related along a fixed linear order.
std::vector<NamedPair> RandomPairs(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(density);
  std::vector<NamedPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) pairs.emplace_back("e" + std::to_string(i), "e" + std::to_string(j));
    }
  }
  return pairs;
}

PosetPtr BooleanPoset(int n) {
  return NamedPosetPtr("boolean(" + std::to_string(n) + ")");
}

void BM_BuildPoset(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<NamedPair> pairs = RandomPairs(n, 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(BuildPoset(pairs));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPoset)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Classify(benchmark::State& state) {
  PosetPtr p = BooleanPoset(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Classify(*p));
}
BENCHMARK(BM_Classify)->DenseRange(3, 6);

void BM_CheckValuation(benchmark::State& state) {
  PosetPtr p = BooleanPoset(static_cast<int>(state.range(0)));
  Valuation v = CardinalIdeal(p);
  for (auto _ : state) benchmark::DoNotOptimize(CheckValuation(v));
}
BENCHMARK(BM_CheckValuation)->DenseRange(3, 6);

void BM_InduceMetric(benchmark::State& state) {
  PosetPtr p = BooleanPoset(static_cast<int>(state.range(0)));
  Valuation v = CardinalIdeal(p);
  for (auto _ : state) benchmark::DoNotOptimize(InduceMetric(v));
}
BENCHMARK(BM_InduceMetric)->DenseRange(3, 5);

void BM_JiangConrath(benchmark::State& state) {
  PosetPtr p = NamedPosetPtr("JC");
  WeightFunction t = WeightFunction::Uniform(p);
  for (auto _ : state) benchmark::DoNotOptimize(JiangConrathDistance(p, t));
}
BENCHMARK(BM_JiangConrath);

void BM_EnumerateSubgroups(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::Named(state.range(0) == 0 ? "S4" : "D4");
  for (auto _ : state) benchmark::DoNotOptimize(EnumerateSubgroups(g));
}
BENCHMARK(BM_EnumerateSubgroups)->Arg(0)->Arg(1);

void BM_SearchJcTriangle(benchmark::State& state) {
  PosetPtr p = NamedPosetPtr("JC");
  SearchOptions options;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    options.seed = seed++;
    benchmark::DoNotOptimize(SearchCounterexample(p, SearchTarget::kJcTriangle, options));
  }
}
BENCHMARK(BM_SearchJcTriangle);

void BM_SearchExhaustMiss(benchmark::State& state) {
  // A chain never violates the triangle inequality, so the whole budget runs.
  PosetPtr p = NamedPosetPtr("chain(5)");
  SearchOptions options;
  options.budget = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchCounterexample(p, SearchTarget::kJcTriangle, options));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchExhaustMiss)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace posetval

BENCHMARK_MAIN();
