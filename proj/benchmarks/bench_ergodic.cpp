#include <apergo/ergodic.hpp>
#include <apergo/generators.hpp>
#include <apergo/measures.hpp>
#include <apergo/probes.hpp>
#include <apergo/signal.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_ErgodicMeanMeasure(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const double extent = 50.0;
  const apergo::Domain domain =
      apergo::Domain::r_grid(extent, extent / (points / 2));
  const apergo::SampledSignal f =
      apergo::gen_random_trig_polynomial(domain, 2, 4, 1.0, 5.0, 11);
  const apergo::MeasureDensity mu = apergo::MeasureDensity::lebesgue();
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::ergodic_mean_measure(f, mu, extent));
  }
  state.SetItemsProcessed(state.iterations() * points);
}
BENCHMARK(BM_ErgodicMeanMeasure)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 17);

void BM_ApProbe(benchmark::State& state) {
  const int points = static_cast<int>(state.range(0));
  const apergo::Domain domain = apergo::Domain::r_grid(points * 0.025, 0.05);
  apergo::Matrix vals(1, domain.size());
  for (int i = 0; i < domain.size(); ++i) {
    vals(0, i) = std::sin(domain.point(i));
  }
  const apergo::SampledSignal u(domain, std::move(vals),
                                apergo::NormKind::euclidean());
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::ap_probe(u, 0.2));
  }
}
BENCHMARK(BM_ApProbe)->Arg(1 << 9)->Arg(1 << 11)->Arg(1 << 13);

void BM_ErgodicityProfile(benchmark::State& state) {
  const apergo::Domain domain = apergo::Domain::z_window(
      static_cast<int>(state.range(0)));
  const apergo::SampledSignal u =
      apergo::gen_random_trig_polynomial(domain, 1, 3, 1.0, 4.0, 12);
  const apergo::WeightSeq w =
      apergo::WeightSeq::uniform(static_cast<int>(state.range(0)));
  const std::vector<double> radii{10.0, 100.0,
                                  static_cast<double>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apergo::ergodicity_profile(u, w, radii));
  }
}
BENCHMARK(BM_ErgodicityProfile)->Arg(1 << 10)->Arg(1 << 13);

}  // namespace
