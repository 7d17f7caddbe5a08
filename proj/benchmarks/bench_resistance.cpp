#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

#include "scer/metrics.hpp"
#include "scer/resistance.hpp"

namespace {

// full (d)-skeleton of the simplex on n vertices
scer::WeightedComplex skeleton(int n, int d) {
  std::vector<std::vector<int>> facets;
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  while (true) {
    facets.push_back(idx);
    int k = d;
    while (k >= 0 && idx[k] == n - (d + 1 - k)) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return scer::WeightedComplex::from_facets(facets);
}

void bm_er_matrix_graph(benchmark::State& state) {
  auto K = skeleton(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto R = scer::er_bilinear_matrix(K, 1, scer::MatrixBasis::Standard);
    benchmark::DoNotOptimize(R.entries.data());
  }
}
BENCHMARK(bm_er_matrix_graph)->Arg(10)->Arg(20)->Arg(40);

void bm_er_matrix_2skeleton(benchmark::State& state) {
  auto K = skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto R = scer::er_bilinear_matrix(K, 2, scer::MatrixBasis::Standard);
    benchmark::DoNotOptimize(R.entries.data());
  }
}
BENCHMARK(bm_er_matrix_2skeleton)->Arg(8)->Arg(12)->Arg(16);

void bm_laplacian_assembly(benchmark::State& state) {
  auto K = skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto L = scer::laplacian(K, 1, scer::LapKind::Hodge, scer::Side::Cochain,
                             scer::MatrixBasis::Orthonormal);
    benchmark::DoNotOptimize(L.entries.data());
  }
}
BENCHMARK(bm_laplacian_assembly)->Arg(10)->Arg(20);

void bm_foster_check(benchmark::State& state) {
  auto K = skeleton(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto rep = scer::foster_check(K, 2);
    benchmark::DoNotOptimize(rep.trace_T);
  }
}
BENCHMARK(bm_foster_check)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
