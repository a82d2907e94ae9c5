#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zetaform/corpus.hpp"
#include "zetaform/elementary.hpp"
#include "zetaform/oracle.hpp"

namespace {

void BM_DecomposeElementary(benchmark::State& state) {
  const int shift = static_cast<int>(state.range(0));
  zetaform::ElementarySum e({2, 1, 1}, {shift, 1, shift});
  for (auto _ : state) {
    zetaform::LinearForm form = zetaform::decompose(e);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_DecomposeElementary)->Arg(1)->Arg(2)->Arg(4);

void BM_ElementarySeriesOracle(benchmark::State& state) {
  zetaform::ElementarySum e({2, 1, 1}, {2, 1, 2});
  const long order = state.range(0);
  for (auto _ : state) {
    auto window = zetaform::elementary_series(e, order);
    benchmark::DoNotOptimize(window);
  }
}
BENCHMARK(BM_ElementarySeriesOracle)->Arg(32)->Arg(128);

void BM_ReduceNestedCorpus(benchmark::State& state) {
  std::mt19937_64 rng(42);
  std::vector<zetaform::NestedSum> corpus;
  for (int i = 0; i < 20; ++i) corpus.push_back(zetaform::random_nested_sum(rng));
  for (auto _ : state)
    for (const auto& s : corpus) {
      auto terms = zetaform::reduce(s);
      benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_ReduceNestedCorpus);

void BM_DecomposeVasilyev(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const long n = state.range(1);
  auto [p, d] = zetaform::vasilyev_params(l, n);
  for (auto _ : state) {
    zetaform::LinearForm form = zetaform::decompose_integral(p, d);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_DecomposeVasilyev)->Args({1, 1})->Args({1, 3})->Args({2, 0})
    ->Unit(benchmark::kMillisecond);

void BM_CoupledSeriesOracle(benchmark::State& state) {
  auto [p, d] = zetaform::vasilyev_params(1, 2);
  const long order = state.range(0);
  for (auto _ : state) {
    auto window = zetaform::coupled_sum_series(p, order);
    benchmark::DoNotOptimize(window);
  }
}
BENCHMARK(BM_CoupledSeriesOracle)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
