// Serial reference vs OpenMP kernels on the log-weight table workloads used by
// the norm certificates.
#include <benchmark/benchmark.h>

#include <vector>

#include "kshift/kernels.hpp"
#include "kshift/weights.hpp"

using namespace kshift;
using namespace kshift::kernels;

namespace {

const WeightSequence& paper_weights() {
  static const WeightSequence w = WeightSequence::paper(2.0);
  return w;
}

void BM_FillSerial(benchmark::State& state) {
  std::vector<long double> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    fill_log_weights_serial(paper_weights(), -state.range(0) / 2, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FillParallel(benchmark::State& state) {
  std::vector<long double> out(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    fill_log_weights(paper_weights(), -state.range(0) / 2, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_ShiftedMax(benchmark::State& state) {
  const std::int64_t half = state.range(0) / 2;
  const std::int64_t power = 4096;
  const LogWeightTable table(paper_weights(), -half - power, half + power);
  for (auto _ : state) {
    const ShiftedMax m =
        Parallel ? max_shifted_difference(table.values(), table.first(), -half, half, power, 1)
                 : max_shifted_difference_serial(table.values(), table.first(), -half, half, power, 1);
    benchmark::DoNotOptimize(m);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_FillSerial)->RangeMultiplier(10)->Range(10000, 2000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FillParallel)->RangeMultiplier(10)->Range(10000, 2000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftedMax<false>)->RangeMultiplier(10)->Range(10000, 2000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShiftedMax<true>)->RangeMultiplier(10)->Range(10000, 2000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
