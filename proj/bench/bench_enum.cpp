#include <benchmark/benchmark.h>

#include "hadj/tree_enum.hpp"

namespace {

void BM_ClassesParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadj::brute_force_classes(n).class_count);
}

void BM_ClassesSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadj::brute_force_classes_serial(n).class_count);
}

void BM_WreathParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadj::wreath_involutions(n));
}

void BM_WreathSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadj::wreath_involutions_serial(n));
}

void BM_Recurrence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hadj::class_count_recurrence(n));
}

}  // namespace

BENCHMARK(BM_ClassesParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassesSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WreathParallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WreathSerial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Recurrence)->DenseRange(5, 20, 5);

BENCHMARK_MAIN();
