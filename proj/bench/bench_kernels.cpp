#include <benchmark/benchmark.h>

#include "orbitgr/kl.hpp"
#include "orbitgr/qmatrix.hpp"

using namespace orbitgr;

namespace {

const char* kGroups[] = {"A4", "B4", "A5"};

void kl_table(benchmark::State& state, Execution execution) {
  const WeylGroup g = WeylGroup::parse(kGroups[state.range(0)]);
  for (auto _ : state) {
    KLTable t(g, execution);
    benchmark::DoNotOptimize(t.mu(0, g.longest()));
  }
  state.SetLabel(g.name());
}

QMatrix test_matrix(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational((i * 31 + j * 17) % 11 - 5, 1 + (i + 2 * j) % 4);
  return m;
}

void matrix_rank(benchmark::State& state, Execution execution) {
  const QMatrix m = test_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank(execution));
}

void BM_KLTableSerial(benchmark::State& s) { kl_table(s, Execution::Serial); }
void BM_KLTableParallel(benchmark::State& s) { kl_table(s, Execution::Parallel); }
void BM_RankSerial(benchmark::State& s) { matrix_rank(s, Execution::Serial); }
void BM_RankParallel(benchmark::State& s) { matrix_rank(s, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_KLTableSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KLTableParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
