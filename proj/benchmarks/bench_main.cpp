#include <benchmark/benchmark.h>

#include <random>

#include "remon/capacity.hpp"
#include "remon/essential.hpp"
#include "remon/graph.hpp"
#include "remon/precision.hpp"
#include "remon/simulate.hpp"

using namespace remon;

namespace {

Scalar s(long long n, long long d = 1) { return Scalar::exact(n, d); }

MonitoringInstance noisy_pd() { return pd_instance(s(1, 10), s(1, 10), s(1, 10)); }

Channel pd_joint() {
  const auto inst = noisy_pd();
  const auto rec = essential_recoding(inst, ClassMode::majority);
  return product_channel(inst.players[0].monitoring, rec.recoded);
}

UndirectedGraph random_graph(size_t n, double p, uint32_t seed) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  UndirectedGraph g(std::move(labels));
  std::mt19937 rng(seed);
  std::bernoulli_distribution flip(p);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      if (flip(rng)) g.add_edge(a, b);
  return g;
}

void BM_MonitoringPrecision(benchmark::State& state) {
  const Channel joint = pd_joint();
  for (auto _ : state)
    benchmark::DoNotOptimize(monitoring_precision({joint}));
}
BENCHMARK(BM_MonitoringPrecision);

void BM_MinimalColoring(benchmark::State& state) {
  const auto g = random_graph(static_cast<size_t>(state.range(0)), 0.4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_coloring(g));
}
BENCHMARK(BM_MinimalColoring)->Arg(10)->Arg(14)->Arg(18);

void BM_EssentialRate(benchmark::State& state) {
  const auto inst = noisy_pd();
  const auto rec = essential_recoding(inst, ClassMode::majority);
  for (auto _ : state) benchmark::DoNotOptimize(essential_rate(inst, rec));
}
BENCHMARK(BM_EssentialRate);

void BM_CommonMessageCapacity(benchmark::State& state) {
  const Channel a({"0", "1"}, {"0", "1"},
                  {{s(9, 10), s(1, 10)}, {s(1, 10), s(9, 10)}});
  const Channel b({"0", "1"}, {"0", "1"},
                  {{s(1), s(0)}, {s(3, 10), s(7, 10)}});
  for (auto _ : state)
    benchmark::DoNotOptimize(common_message_capacity({a, b}));
}
BENCHMARK(BM_CommonMessageCapacity);

void BM_SimulateOneShot(benchmark::State& state) {
  auto inst = noisy_pd();
  const auto rec = essential_recoding(inst, ClassMode::majority);
  inst.broadcast =
      product_broadcast(Channel::identity(rec.essential_alphabet), 2);
  const auto trials = static_cast<uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simulate_one_shot(inst, rec, trials, 1));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(trials));
}
BENCHMARK(BM_SimulateOneShot)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
