#include <benchmark/benchmark.h>

#include <random>

#include "factorcomplex/field.hpp"
#include "factorcomplex/freegroup.hpp"
#include "factorcomplex/homology.hpp"
#include "factorcomplex/spheres.hpp"

using namespace fcx;

namespace {

SparseMatrix random_sparse(int rows, int cols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  SparseMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      if (keep(rng)) m.columns[c].emplace_back(r, rng() % 2 ? 1 : -1);
    }
  }
  return m;
}

void BM_RankModP(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto m = random_sparse(size, size, 4.0 / size, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, 2147483629u));
}
BENCHMARK(BM_RankModP)->Arg(200)->Arg(1000)->Arg(3000);

void BM_RankRational(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const auto m = random_sparse(size, size, 4.0 / size, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m));
}
BENCHMARK(BM_RankRational)->Arg(200)->Arg(1000);

void BM_SmithBoundary(benchmark::State& state) {
  const auto c = ChainComplex::of(build_CB(3, 2));
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(c.boundary(d)));
}
BENCHMARK(BM_SmithBoundary)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_BuildCB32(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_CB(3, 2, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildCB32)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HomologyCB32(benchmark::State& state) {
  const auto k = build_CB(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(homology_report(k));
}
BENCHMARK(BM_HomologyCB32)->Unit(benchmark::kMillisecond);

void BM_Fold(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<Word> gens;
  for (int i = 0; i < state.range(0); ++i) {
    Word w;
    for (int k = 0; k < 12; ++k) w.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 3)));
    gens.push_back(free_reduce(w));
  }
  for (auto _ : state) benchmark::DoNotOptimize(fold(3, gens));
}
BENCHMARK(BM_Fold)->Arg(2)->Arg(8)->Arg(32);

void BM_IsPrimitive(benchmark::State& state) {
  const Word w = parse_word("abaabaabab", 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(w, 2));
}
BENCHMARK(BM_IsPrimitive);

void BM_EnumerateBases(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_bases(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateBases)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EnumerateGraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateGraphs)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = enumerate_graphs(4, 6);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_CanonicalForm);

}  // namespace
BENCHMARK_MAIN();
