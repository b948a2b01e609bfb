#include <benchmark/benchmark.h>

#include <random>

#include "tga/cocycle.hpp"
#include "tga/lambda.hpp"
#include "tga/valuation.hpp"

using namespace tga;

namespace {

GroupTable product_of_cyclics(const std::vector<long>& orders) {
  PcPresentation p;
  p.relative_orders = orders;
  p.power_words.resize(orders.size());
  return group_from_presentation(p).table;
}

GroupTable family3_core(long n) {
  PcPresentation p;
  p.relative_orders = {1L << (n + 1), 1L << n, 2};
  p.power_words.resize(3);
  p.conjugates[{1, 0}] = {{0, 3}};
  p.conjugates[{2, 0}] = {{0, (1L << (n + 1)) - 1}};
  return group_from_presentation(p).table;
}

void BM_classify(benchmark::State& state) {
  GroupTable g = state.range(0) == 0 ? product_of_cyclics({4, 4, 2, 2}) : family3_core(2);
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}

void BM_realize(benchmark::State& state) {
  LambdaVerdict v = classify(family3_core(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(realize(v));
}

void BM_cocycle_check(benchmark::State& state) {
  Recipe r = realize(classify(family3_core(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_cocycle(r.cocycle, r.group.table));
}

void BM_value_group(benchmark::State& state) {
  std::vector<long> invs(static_cast<size_t>(state.range(0)), 4);
  Recipe r = realize(classify(product_of_cyclics(invs)));
  for (auto _ : state) benchmark::DoNotOptimize(relative_value_group(r.cocycle, r.group.table));
}

void BM_collect(benchmark::State& state) {
  Recipe r = realize(classify(family3_core(2)));
  CollectionRules rules = CollectionRules::from(r.pres);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, r.pres.base.num_gens() - 1);
  std::vector<std::vector<int>> words(64, std::vector<int>(static_cast<size_t>(state.range(0))));
  for (auto& w : words)
    for (int& x : w) x = pick(rng);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(collect(rules, words[i]));
    i = (i + 1) % words.size();
  }
}

}  // namespace

BENCHMARK(BM_classify)->Arg(0)->Arg(1);
BENCHMARK(BM_realize)->Arg(1)->Arg(2);
BENCHMARK(BM_cocycle_check)->Arg(1)->Arg(2);
BENCHMARK(BM_value_group)->Arg(2)->Arg(4);
BENCHMARK(BM_collect)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
