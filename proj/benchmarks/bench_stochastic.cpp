#include <apergo/measures.hpp>
#include <apergo/signal.hpp>
#include <apergo/stochastic.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_GaussianScaled(benchmark::State& state) {
  const apergo::Domain domain = apergo::Domain::r_grid(10.0, 0.1);
  const int draws = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::ProcessEnsemble::gaussian_scaled(
        domain, [](double t) { return std::exp(-std::abs(t)); }, draws, 1, 21));
  }
  state.SetItemsProcessed(state.iterations() * draws * domain.size());
}
BENCHMARK(BM_GaussianScaled)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 14);

void BM_SecondMoments(benchmark::State& state) {
  const apergo::Domain domain = apergo::Domain::r_grid(10.0, 0.1);
  const apergo::ProcessEnsemble x = apergo::ProcessEnsemble::gaussian_scaled(
      domain, [](double t) { return std::exp(-std::abs(t)); },
      static_cast<int>(state.range(0)), 1, 22);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.second_moments());
  }
}
BENCHMARK(BM_SecondMoments)->Arg(1 << 8)->Arg(1 << 12)->Arg(1 << 14);

void BM_EquivalenceCheck(benchmark::State& state) {
  const apergo::Domain domain = apergo::Domain::r_grid(10.0, 0.1);
  const apergo::ProcessEnsemble x = apergo::ProcessEnsemble::gaussian_scaled(
      domain, [](double t) { return std::exp(-std::abs(t)); },
      static_cast<int>(state.range(0)), 1, 23);
  const apergo::MeasureDensity mu = apergo::MeasureDensity::lebesgue();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        apergo::equivalence_check(x, mu, {1.0, 2.0, 5.0, 10.0}));
  }
}
BENCHMARK(BM_EquivalenceCheck)->Arg(1 << 8)->Arg(1 << 12);

}  // namespace
