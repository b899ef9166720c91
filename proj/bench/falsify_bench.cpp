#include <benchmark/benchmark.h>

#include "luk/formula.hpp"
#include "luk/semantics.hpp"

namespace {

// Two-variable tautology (an A2 instance), so the search always scans the
// whole grid: worst case for both kernels.
const luk::Formula& tautology2() {
  static const luk::Formula f = luk::parse_formula(
      "(X1 -> X2) -> ((X2 -> X1 (+) X2) -> (X1 -> X1 (+) X2))");
  return f;
}

// Falsifiable formula; the first hit arrives after a partial scan, which
// shows the early-exit overhead of the blocked parallel kernel.
const luk::Formula& falsifiable2() {
  static const luk::Formula f = luk::parse_formula("~(X1 (.) X2)");
  return f;
}

void BM_falsify_serial_full_scan(benchmark::State& state) {
  const auto den = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = luk::falsify_serial(tautology2(), den);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_falsify_serial_full_scan)->Arg(6)->Arg(10)->Arg(14);

void BM_falsify_parallel_full_scan(benchmark::State& state) {
  const auto den = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = luk::falsify(tautology2(), den);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_falsify_parallel_full_scan)->Arg(6)->Arg(10)->Arg(14);

void BM_falsify_serial_hit(benchmark::State& state) {
  const auto den = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = luk::falsify_serial(falsifiable2(), den);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_falsify_serial_hit)->Arg(10)->Arg(14);

void BM_falsify_parallel_hit(benchmark::State& state) {
  const auto den = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto r = luk::falsify(falsifiable2(), den);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_falsify_parallel_hit)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
