// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "quadrep/oracle.hpp"
#include "quadrep/parallel.hpp"

using namespace quadrep;

namespace {

std::vector<ProblemSpec> sweep(long d_max, long m_max) {
  std::vector<ProblemSpec> out;
  for (long d = 1; d <= d_max; ++d) {
    for (long m = 2; m <= m_max; ++m) {
      if (gcd(Int(d), Int(m)) == 1) out.push_back({d, m});
    }
  }
  return out;
}

void BM_SolveBatchSerial(benchmark::State& state) {
  auto ps = sweep(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_proper_batch_serial(ps));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

void BM_SolveBatchParallel(benchmark::State& state) {
  auto ps = sweep(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_proper_batch(ps));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

void BM_BruteBatchSerial(benchmark::State& state) {
  auto ps = sweep(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_proper_batch_serial(ps));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

void BM_BruteBatchParallel(benchmark::State& state) {
  auto ps = sweep(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_proper_batch(ps));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ps.size()));
}

void BM_BruteLargeSerial(benchmark::State& state) {
  const Nat m("58674434381", 10);
  for (auto _ : state) benchmark::DoNotOptimize(brute_solutions(1, m));
}

void BM_BruteLargeParallel(benchmark::State& state) {
  const Nat m("58674434381", 10);
  for (auto _ : state) benchmark::DoNotOptimize(brute_solutions_parallel(1, m));
}

}  // namespace

BENCHMARK(BM_SolveBatchSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveBatchParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteBatchSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteBatchParallel)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteLargeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteLargeParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
