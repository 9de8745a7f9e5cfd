// One backward-induction layer: OpenMP kernel vs the same kernel run
// serially vs the direct reference. Args are (net points, cops).

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "pursuit/kernels.hpp"

using namespace pursuit;

namespace {

struct Layer {
  NetPtr net;
  TupleIndex index;
  ReachSet reach;
  std::vector<double> prev, next;

  Layer(int points, int k)
      : net(build_net(std::make_shared<SphereSpace>(1), 2 * std::numbers::pi / points)),
        index(net->size(), k),
        reach(*net, 4 * 2 * std::numbers::pi / points),
        prev(base_layer(*net, index)),
        next(index.size()) {}
};

void BM_GameStepParallel(benchmark::State& state) {
  Layer l(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    game_step(l.index, l.reach, l.prev, l.next, nullptr, true);
    benchmark::DoNotOptimize(l.next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(l.index.size()));
}

void BM_GameStepSerial(benchmark::State& state) {
  Layer l(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    game_step(l.index, l.reach, l.prev, l.next, nullptr, false);
    benchmark::DoNotOptimize(l.next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(l.index.size()));
}

void BM_GameStepReference(benchmark::State& state) {
  Layer l(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    game_step_serial_reference(l.index, l.reach, l.prev, l.next);
    benchmark::DoNotOptimize(l.next.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(l.index.size()));
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({64, 1})->Args({256, 1})->Args({64, 2})->Args({128, 2})->Unit(benchmark::kMicrosecond);
}

// The reference is two orders slower; skip the largest layer.
void small_sizes(benchmark::internal::Benchmark* b) {
  b->Args({64, 1})->Args({256, 1})->Args({64, 2})->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_GameStepParallel)->Apply(sizes);
BENCHMARK(BM_GameStepSerial)->Apply(sizes);
BENCHMARK(BM_GameStepReference)->Apply(small_sizes);

BENCHMARK_MAIN();
