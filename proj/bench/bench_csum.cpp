// Serial reference (walks every ideal) against the parallel norm-class path.
#include <benchmark/benchmark.h>

#include "irs/csum.hpp"

namespace {

constexpr std::uint64_t kX = 100;

const irs::SummatoryTables& tables(std::int64_t D, std::uint64_t Y) {
  static irs::SummatoryTables t;
  if (t.discriminant != D || t.bound < Y) t = irs::build_tables(irs::FieldSpec(D), Y);
  return t;
}

void BM_Reference(benchmark::State& state) {
  const irs::FieldSpec spec(-4);
  const auto Y = static_cast<std::uint64_t>(state.range(0));
  const auto& t = tables(-4, Y);
  for (auto _ : state) benchmark::DoNotOptimize(irs::c_sum_reference(spec, 2, kX, Y, t));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(Y));
}

void BM_Fast(benchmark::State& state) {
  const irs::FieldSpec spec(-4);
  const auto Y = static_cast<std::uint64_t>(state.range(0));
  const auto threads = static_cast<int>(state.range(1));
  const auto& t = tables(-4, Y);
  for (auto _ : state) benchmark::DoNotOptimize(irs::c_sum_fast(spec, 2, kX, Y, t, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(Y));
}

}  // namespace

BENCHMARK(BM_Reference)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fast)->ArgsProduct({{10'000, 100'000, 1'000'000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
