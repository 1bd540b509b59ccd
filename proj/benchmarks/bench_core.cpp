#include <benchmark/benchmark.h>

#include "tppforge/realize.hpp"
#include "tppforge/rng.hpp"
#include "tppforge/search.hpp"

namespace {

using namespace tppforge;

ElementSet random_subset(SplitMix64& rng, int order, int size) {
  ElementSet s(order);
  while (s.size() < size) s.insert(static_cast<int>(rng.below(order)));
  return s;
}

void BM_RightQuotient(benchmark::State& state) {
  Group g = build_group("dihedral:12");
  SplitMix64 rng(1);
  ElementSet x = random_subset(rng, g.order(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(right_quotient(g, x));
}
BENCHMARK(BM_RightQuotient)->Arg(2)->Arg(8)->Arg(16)->Arg(24);

void BM_TppCheckTight(benchmark::State& state) {
  Group g = build_group("dihedral:12");
  TppTriple tight(g, ElementSet::full(g.order()), ElementSet::of(g.order(), {0}),
                  ElementSet::of(g.order(), {0}));
  for (auto _ : state) benchmark::DoNotOptimize(tpp_check(tight));
}
BENCHMARK(BM_TppCheckTight);

void BM_TppCheckDense(benchmark::State& state) {
  Group g = build_group("dihedral:12");
  SplitMix64 rng(2);
  TppTriple triple(g, random_subset(rng, g.order(), 8), random_subset(rng, g.order(), 8),
                   random_subset(rng, g.order(), 8));
  for (auto _ : state) benchmark::DoNotOptimize(tpp_check(triple));
}
BENCHMARK(BM_TppCheckDense);

void BM_RingMul(benchmark::State& state) {
  Group g = build_group("symmetric:4");
  SplitMix64 rng(3);
  GroupRingElement a(g), b(g);
  for (int i = 0; i < state.range(0); ++i) {
    a.add(static_cast<int>(rng.below(g.order())), rng.between(1, 50));
    b.add(static_cast<int>(rng.below(g.order())), rng.between(1, 50));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ring_mul(a, b));
}
BENCHMARK(BM_RingMul)->Arg(4)->Arg(12)->Arg(24);

void BM_MatmulViaGroup(benchmark::State& state) {
  Group g = build_group("symmetric:3");
  TppTriple triple(g, ElementSet::of(6, {0, 1}), ElementSet::of(6, {0, 2}),
                   ElementSet::of(6, {0, 5}));
  SplitMix64 rng(4);
  IndexedMatrix a = random_matrix(triple.s().elements(), triple.t().elements(), rng);
  IndexedMatrix b = random_matrix(triple.t().elements(), triple.u().elements(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(matmul_via_group(a, b, triple));
}
BENCHMARK(BM_MatmulViaGroup);

void BM_Search(benchmark::State& state) {
  static const char* kGroups[] = {"cyclic:8", "symmetric:3", "dihedral:4"};
  static const Pruning kModes[] = {Pruning::kNone, Pruning::kMurthy, Pruning::kQBound,
                                   Pruning::kAll};
  Group g = build_group(kGroups[state.range(0)]);
  SearchConfig config;
  config.pruning = kModes[state.range(1)];

  std::uint64_t nodes = 0;
  for (auto _ : state) {
    SearchReport report = search_max_triple(g, config);
    nodes = report.nodes_visited;
    benchmark::DoNotOptimize(report);
  }
  state.SetLabel(g.name() + "/" + to_string(config.pruning));
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_Search)->ArgsProduct({{0, 1, 2}, {0, 1, 2, 3}});

void BM_EnumerateAllTpp(benchmark::State& state) {
  Group g = build_group("cyclic:8");
  for (auto _ : state) {
    long long count = 0;
    enumerate_all_tpp(g, [&](const TppTriple&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateAllTpp);

}  // namespace

BENCHMARK_MAIN();
