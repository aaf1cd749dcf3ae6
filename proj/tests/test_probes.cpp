#include <apergo/generators.hpp>
#include <apergo/probes.hpp>
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using apergo::APProbeOptions;
using apergo::APProbeResult;
using apergo::AAProbeResult;
using apergo::Domain;
using apergo::ProbeVerdict;
using apergo::SampledSignal;

namespace {

constexpr double kPi = 3.14159265358979323846;

SampledSignal periodic_sequence(int period, int half_window) {
  const Domain d = Domain::z_window(half_window);
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const long long n = std::llround(d.point(i));
    const long long r = ((n % period) + period) % period;
    values[i] = std::sin(2.0 * kPi * static_cast<double>(r) /
                         static_cast<double>(period)) +
                0.25 * static_cast<double>(r);
  }
  return test::scalar_signal(d, values);
}

}  // namespace

TEST_CASE("ap_probe certifies periodic sequences with their period") {
  const SampledSignal p5 = periodic_sequence(5, 200);
  const APProbeResult r5 = apergo::ap_probe(p5, 1e-9);
  CHECK(r5.verdict == ProbeVerdict::Accepted);
  CHECK(r5.window_steps == 5);
  // every certified shift reproduces the signal up to epsilon
  for (double tau : r5.translation_numbers) {
    CHECK(std::fmod(std::abs(tau), 5.0) == doctest::Approx(0.0));
  }
  for (double defect : r5.defects) CHECK(defect <= 1e-9);

  const SampledSignal p2 = periodic_sequence(2, 200);
  const APProbeResult r2 = apergo::ap_probe(p2, 1e-9);
  CHECK(r2.verdict == ProbeVerdict::Accepted);
  CHECK(r2.window_steps == 2);
}

TEST_CASE("ap_probe accepts a two-frequency almost periodic signal") {
  const Domain d = Domain::r_grid(200.0, 0.05);
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double t = d.point(i);
    values[i] = std::sin(t) + std::sin(std::sqrt(2.0) * t);
  }
  const SampledSignal u = test::scalar_signal(d, values);
  const APProbeResult r = apergo::ap_probe(u, 0.2);
  CHECK(r.verdict == ProbeVerdict::Accepted);
  CHECK(r.window_steps >= 1);
  CHECK(r.window_steps <= r.max_window_steps);
  REQUIRE(!r.translation_numbers.empty());
  // re-verify the certificate by hand on the reported overlap rule
  const double step = d.step();
  CHECK(r.window_length == doctest::Approx(r.window_steps * step));
  const auto& vals = u.values();
  for (std::size_t k = 0; k < r.translation_numbers.size(); ++k) {
    const int shift = static_cast<int>(
        std::llround(r.translation_numbers[k] / step));
    double sup = 0.0;
    for (std::size_t i = 0; i + static_cast<std::size_t>(std::abs(shift)) <
                            d.size();
         ++i) {
      const std::size_t j = i + static_cast<std::size_t>(std::abs(shift));
      sup = std::max(sup, std::abs(vals(0, j) - vals(0, i)));
    }
    CHECK(sup <= 0.2 + 1e-12);
    CHECK(sup == doctest::Approx(r.defects[k]).epsilon(1e-9));
  }
}

TEST_CASE("ap_probe rejects a drifting signal") {
  const Domain d = Domain::z_window(500);
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    values[i] = 0.01 * d.point(i);
  }
  const APProbeResult r = apergo::ap_probe(test::scalar_signal(d, values), 0.5);
  CHECK(r.verdict == ProbeVerdict::Rejected);
  // small shifts do pass the defect test, but the hole after them needs a
  // block wider than the cap
  CHECK(r.window_steps > r.max_window_steps);
}

TEST_CASE("ap_probe guards against too little data") {
  const Domain tiny = Domain::z_window(4);
  std::vector<double> v(tiny.size(), 1.0);
  CHECK_THROWS_AS(
      static_cast<void>(apergo::ap_probe(test::scalar_signal(tiny, v), -1.0)),
      apergo::Error);

  APProbeOptions opts;
  opts.min_shift_count = 50;
  const Domain d = Domain::z_window(20);
  std::vector<double> values(d.size(), 1.0);
  const APProbeResult r =
      apergo::ap_probe(test::scalar_signal(d, values), 0.1, opts);
  CHECK(r.verdict == ProbeVerdict::Inconclusive);
}

TEST_CASE("aa_probe stabilizes along Fibonacci shifts of an irrational wave") {
  const Domain d = Domain::z_window(2000);
  const double theta = (std::sqrt(5.0) - 1.0) / 2.0;
  std::vector<double> values(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    values[i] = std::sin(2.0 * kPi * theta * d.point(i));
  }
  const SampledSignal u = test::scalar_signal(d, values);
  const std::vector<double> shifts = {34,  55,  89,  144, 233,
                                      377, 610, 987, 1597};
  const AAProbeResult r = apergo::aa_probe(u, shifts, 0.75);
  CHECK(r.verdict == ProbeVerdict::Accepted);
  CHECK(r.subsequence.size() >= 2);
  CHECK(r.max_forward_residual <= 0.75 + 1e-12);
  REQUIRE(r.forward_residuals.size() == r.subsequence.size());
  // the last forward residual compares the limit against itself
  CHECK(r.forward_residuals.back() == doctest::Approx(0.0));
  // each residual compares u(. + F_k) with u(. + F_last), so it is bounded
  // by how close (F_k - F_last) theta sits to an integer
  REQUIRE(r.subsequence.size() == r.forward_residuals.size());
  const double last = r.subsequence.back();
  for (std::size_t k = 0; k < r.forward_residuals.size(); ++k) {
    const double gap = (r.subsequence[k] - last) * theta;
    const double dist = std::abs(gap - std::round(gap));
    CHECK(r.forward_residuals[k] <= 2.0 * kPi * dist + 1e-9);
  }
  CHECK(r.max_backward_residual <= 1.5);
}

TEST_CASE("aa_probe reports inconclusive without enough usable shifts") {
  const Domain d = Domain::z_window(30);
  std::vector<double> values(d.size(), 1.0);
  const SampledSignal u = test::scalar_signal(d, values);
  // shifts in range, but the common window shrinks below min_window_points
  const AAProbeResult r = apergo::aa_probe(u, {55.0, 56.0}, 0.1);
  CHECK(r.verdict == ProbeVerdict::Inconclusive);
  CHECK(r.window_end - r.window_begin < 8);

  // shifts past the grid are a caller error, not an inconclusive run
  CHECK_THROWS_AS(static_cast<void>(apergo::aa_probe(u, {500.0, 700.0}, 0.1)),
                  apergo::Error);
  CHECK_THROWS_AS(static_cast<void>(apergo::aa_probe(u, {}, 0.1)),
                  apergo::Error);
  CHECK_THROWS_AS(static_cast<void>(apergo::aa_probe(u, {1.0}, -0.5)),
                  apergo::Error);
}

TEST_CASE("aa_probe rejects when shifted copies never cluster") {
  apergo::Rng rng(881);
  const Domain d = Domain::z_window(400);
  std::vector<double> values(d.size());
  for (auto& v : values) v = rng.uniform(-1.0, 1.0);
  const SampledSignal u = test::scalar_signal(d, values);
  const AAProbeResult r =
      apergo::aa_probe(u, {10, 20, 30, 40, 50, 60, 70, 80}, 1e-3);
  CHECK(r.verdict == ProbeVerdict::Rejected);
}

TEST_CASE("c0_probe accepts decaying envelopes and rejects constants") {
  const Domain d = Domain::r_plus_grid(40.0, 0.01);
  std::vector<double> decay(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    decay[i] = std::exp(-d.point(i));
  }
  const auto ok = apergo::c0_probe(test::scalar_signal(d, decay), 1e-6, 0.25);
  CHECK(ok.verdict == ProbeVerdict::Accepted);
  REQUIRE(ok.tail_sups.size() >= 2);
  for (std::size_t k = 1; k < ok.tail_sups.size(); ++k) {
    CHECK(ok.tail_sups[k] <= ok.tail_sups[k - 1] + 1e-15);
  }

  std::vector<double> flat(d.size(), 0.3);
  const auto bad = apergo::c0_probe(test::scalar_signal(d, flat), 1e-6, 0.25);
  CHECK(bad.verdict == ProbeVerdict::Rejected);

  // slow decay: the tails shrink, but the first one still dwarfs the
  // threshold, and the deterministic verdict has no middle ground
  std::vector<double> slow(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    slow[i] = 1.0 / (1.0 + d.point(i));
  }
  const auto mid = apergo::c0_probe(test::scalar_signal(d, slow), 1e-6, 0.25);
  CHECK(mid.verdict == ProbeVerdict::Rejected);
  REQUIRE(mid.tail_sups.size() >= 2);
  CHECK(mid.tail_sups.front() > 1e-6);
  for (std::size_t k = 1; k < mid.tail_sups.size(); ++k) {
    CHECK(mid.tail_sups[k] <= mid.tail_sups[k - 1] + 1e-15);
  }
}

TEST_CASE("c0_probe requires a half-line domain and sane parameters") {
  const Domain line = Domain::r_grid(5.0, 0.1);
  std::vector<double> v(line.size(), 0.0);
  CHECK_THROWS_AS(
      static_cast<void>(apergo::c0_probe(test::scalar_signal(line, v), 1e-3, 0.25)),
      apergo::Error);

  const Domain half = Domain::r_plus_grid(5.0, 0.1);
  std::vector<double> w(half.size(), 0.0);
  CHECK_THROWS_AS(static_cast<void>(
                      apergo::c0_probe(test::scalar_signal(half, w), -1e-3, 0.25)),
                  apergo::Error);
  CHECK_THROWS_AS(static_cast<void>(
                      apergo::c0_probe(test::scalar_signal(half, w), 1e-3, 1.5)),
                  apergo::Error);
}
