#include <apergo/norms.hpp>
#include <apergo/rng.hpp>

#include <benchmark/benchmark.h>

namespace {

apergo::Vector random_vector(apergo::Rng& rng, int dim) {
  apergo::Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.normal();
  return v;
}

void BM_RadialRetraction(benchmark::State& state) {
  apergo::Rng rng(1);
  const int dim = static_cast<int>(state.range(0));
  const apergo::Vector x = random_vector(rng, dim);
  const apergo::NormKind kind = apergo::NormKind::euclidean();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::radial_retraction(x, 0.75, kind));
  }
}
BENCHMARK(BM_RadialRetraction)->Arg(4)->Arg(64)->Arg(1024);

void BM_DunklWilliamsSlack(benchmark::State& state) {
  apergo::Rng rng(2);
  const int dim = static_cast<int>(state.range(0));
  const apergo::Vector x = random_vector(rng, dim);
  const apergo::Vector y = random_vector(rng, dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        apergo::dunkl_williams_slack(x, y, apergo::NormKind::euclidean()));
  }
}
BENCHMARK(BM_DunklWilliamsSlack)->Arg(4)->Arg(64)->Arg(1024);

}  // namespace
