#include <apergo/rng.hpp>
#include <apergo/subspace.hpp>
#include <apergo/subspace_analysis.hpp>

#include <benchmark/benchmark.h>

namespace {

apergo::Matrix random_matrix(apergo::Rng& rng, int rows, int cols) {
  apergo::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

void BM_RangeConstant(benchmark::State& state) {
  apergo::Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const apergo::Matrix l = random_matrix(rng, n, n + 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::range_constant(l).constant_c);
  }
}
BENCHMARK(BM_RangeConstant)->Arg(4)->Arg(16)->Arg(64);

void BM_SumConstant(benchmark::State& state) {
  apergo::Rng rng(4);
  const int ambient = static_cast<int>(state.range(0));
  const apergo::Subspace m =
      apergo::Subspace::from_spanning(random_matrix(rng, ambient, ambient / 2));
  const apergo::Subspace n =
      apergo::Subspace::from_spanning(random_matrix(rng, ambient, ambient / 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::sum_constant(m, n).constant_c);
  }
}
BENCHMARK(BM_SumConstant)->Arg(4)->Arg(16)->Arg(64);

void BM_MinNormPreimage(benchmark::State& state) {
  apergo::Rng rng(5);
  const int n = static_cast<int>(state.range(0));
  const apergo::Matrix l = random_matrix(rng, n, 2 * n);
  apergo::Vector y(n);
  for (int i = 0; i < n; ++i) y[i] = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::min_norm_preimage(l, y));
  }
}
BENCHMARK(BM_MinNormPreimage)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
