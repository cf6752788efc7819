#include <benchmark/benchmark.h>

#include <qeuler/lfunc.hpp>
#include <qeuler/qnum.hpp>

namespace {

using namespace qeuler;

void BM_QEulerRecurrence(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const Rational q = Rational::parse("4");
  for (auto _ : state) {
    QEulerTable table = q_euler_numbers(n_max, q);
    benchmark::DoNotOptimize(table.values.back());
  }
  state.SetComplexityN(n_max);
}
BENCHMARK(BM_QEulerRecurrence)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_TSum(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const Rational q = Rational::parse("4");
  const PadicContext ctx(3, 40);
  for (auto _ : state) {
    Padic t = t_sum(8, level, q, ctx);
    benchmark::DoNotOptimize(t);
  }
  long terms = 1;
  for (int i = 0; i < level; ++i) terms *= 3;
  state.SetItemsProcessed(state.iterations() * terms);
}
BENCHMARK(BM_TSum)->DenseRange(3, 7);

void BM_LValue(benchmark::State& state) {
  const Rational q = Rational::parse("4");
  const PadicContext ctx(3, 40);
  const DirichletCharacter chi(1, {});
  for (auto _ : state) {
    LSeriesQuery query{-1L, chi, q, ctx, 4, 8};
    benchmark::DoNotOptimize(l_value(query));
  }
}
BENCHMARK(BM_LValue);

}  // namespace

BENCHMARK_MAIN();
