#include <benchmark/benchmark.h>

#include <random>

#include "wpo/adjacent_ramsey.hpp"
#include "wpo/downset.hpp"
#include "wpo/embedding.hpp"
#include "wpo/experiments.hpp"
#include "wpo/largeness.hpp"
#include "wpo/partition.hpp"

namespace {

using namespace wpo;

void OrdinalAddition(benchmark::State& state) {
  Ordinal a = parse_ordinal("w^(w^2*3+1)*2+w^(w)*4+w*9+5");
  Ordinal b = parse_ordinal("w^(w)*2+w^2+1");
  for (auto _ : state) {
    Ordinal sum = a + b;
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(OrdinalAddition);

void FundamentalDescent(benchmark::State& state) {
  Ordinal tower = omega_tower(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    Ordinal member = tower.fundamental(5);
    benchmark::DoNotOptimize(member);
  }
}
BENCHMARK(FundamentalDescent)->Arg(2)->Arg(3)->Arg(4);

void HardyOmegaSquared(benchmark::State& state) {
  Ordinal w2 = Ordinal::omega_pow(Ordinal(2));
  for (auto _ : state) {
    Budget budget(100'000'000);
    benchmark::DoNotOptimize(hardy(w2, static_cast<Nat>(state.range(0)), budget));
  }
}
BENCHMARK(HardyOmegaSquared)->Arg(4)->Arg(8);

void GeneratorOrder(benchmark::State& state) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Nat> coord(0, 6);
  std::vector<GeneratorSet> sets;
  for (int i = 0; i < 64; ++i) {
    std::vector<Point> pts;
    for (int p = 0; p < 4; ++p)
      pts.push_back(Point{{coord(rng), coord(rng), coord(rng)}});
    sets.emplace_back(3, std::move(pts));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& g = sets[i % sets.size()];
    const auto& h = sets[(i * 31 + 7) % sets.size()];
    benchmark::DoNotOptimize(leq_gen(g, h));
    ++i;
  }
}
BENCHMARK(GeneratorOrder);

void EnumeratePartitions(benchmark::State& state) {
  for (auto _ : state) {
    Budget budget(100'000'000);
    auto all = enumerate_partitions(2, static_cast<Nat>(state.range(0)), budget);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(EnumeratePartitions)->Arg(4)->Arg(6);

void MinRSuccessor(benchmark::State& state) {
  for (auto _ : state) {
    Budget budget(100'000'000);
    auto r = find_min_R(0, 1, [](Nat x) { return x + 1; }, 8, budget);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(MinRSuccessor);

void LongestBadPartitions(benchmark::State& state) {
  GrowthFn growth = parse_growth("id");
  for (auto _ : state) {
    auto result = search_longest_bad_partitions(1, 2, growth, 1'000'000'000);
    benchmark::DoNotOptimize(result.witness.size());
  }
}
BENCHMARK(LongestBadPartitions);

void EmbeddingSweep(benchmark::State& state) {
  for (auto _ : state) {
    Budget budget(1'000'000'000);
    auto report = embedding_sweep(0, CnfPoolSpec{2, 2, 2}, budget);
    benchmark::DoNotOptimize(report.pairs_checked);
  }
}
BENCHMARK(EmbeddingSweep);

}  // namespace

BENCHMARK_MAIN();
