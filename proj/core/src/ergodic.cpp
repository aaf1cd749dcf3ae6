#include "apergo/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apergo {

namespace {

// Integral over [a, b] of the piecewise-linear interpolant of the samples
// g_i given on the signal grid.  [a, b] must lie inside the grid.
double piecewise_linear_integral(const Domain& d, const Vector& g, double a,
                                 double b) {
  if (b <= a) return 0.0;
  const double step = d.step();
  const auto cell_of = [&](double t) {
    int c = static_cast<int>(std::floor((t - d.t0()) / step));
    return std::clamp(c, 0, d.size() - 2);
  };
  const auto value_at = [&](int cell, double t) {
    const double w = (t - d.point(cell)) / step;
    return (1.0 - w) * g[cell] + w * g[cell + 1];
  };
  const int first = cell_of(a);
  const int last = cell_of(b);
  double acc = 0.0;
  for (int cell = first; cell <= last; ++cell) {
    const double lo = std::max(a, d.point(cell));
    const double hi = std::min(b, d.point(cell + 1));
    if (hi <= lo) continue;
    acc += 0.5 * (value_at(cell, lo) + value_at(cell, hi)) * (hi - lo);
  }
  return acc;
}

// Linear interpolation of per-point samples at an arbitrary time inside
// the grid; exact at grid points.
double interp_sample(const Domain& d, const Vector& samples, double t) {
  const double raw = (t - d.t0()) / d.step();
  const int cell = std::clamp(static_cast<int>(std::floor(raw)), 0, d.size() - 2);
  const double w = raw - cell;
  if (w <= 1e-12) return samples[cell];
  if (w >= 1.0 - 1e-12) return samples[cell + 1];
  return (1.0 - w) * samples[cell] + w * samples[cell + 1];
}

int radius_as_window(double radius) {
  const double rounded = std::round(radius);
  require(std::abs(radius - rounded) <= 1e-9 * std::max(1.0, std::abs(radius)),
          errc::invalid_input,
          "discrete averaging needs an integer window radius");
  require(rounded >= 0.0, errc::invalid_input, "window radius must be >= 0");
  return static_cast<int>(rounded);
}

}  // namespace

double ergodic_mean_discrete(const SampledSignal& u, const WeightSeq& p,
                             int window) {
  require(u.domain().kind() == DomainKind::ZWindow, errc::domain_error,
          "discrete ergodic mean needs an integer-indexed signal");
  const int n_max = (u.size() - 1) / 2;
  require(window >= 0, errc::invalid_input, "window must be >= 0");
  require(window <= n_max, errc::range_error,
          "window exceeds the sampled index range");
  require(window <= p.n_max(), errc::range_error,
          "window exceeds the stored weight range");
  double numerator = 0.0;
  double mass = 0.0;
  for (int n = -window; n <= window; ++n) {
    const double w = p.at(n);
    mass += w;
    if (w != 0.0) numerator += w * u.norm_at(n + n_max);
  }
  require(mass > 0.0, errc::degenerate_input,
          "weights vanish on the whole window");
  return numerator / mass;
}

double measure_average(const Domain& domain, const Vector& samples,
                       const MeasureDensity& mu, double r) {
  const DomainKind kind = domain.kind();
  require(kind == DomainKind::RGrid || kind == DomainKind::RPlusGrid,
          errc::domain_error,
          "measure averaging needs a real-line sampled grid");
  const bool half = kind == DomainKind::RPlusGrid;
  require(half == (mu.side() == MeasureSide::HalfLine), errc::domain_error,
          "measure side does not match the signal domain");
  require(samples.size() == domain.size(), errc::grid_mismatch,
          "one sample per grid point required");
  require(samples.allFinite() && samples.minCoeff() >= 0.0, errc::invalid_input,
          "samples must be finite and nonnegative");
  require(std::isfinite(r) && r > 0.0, errc::invalid_input,
          "averaging radius must be positive");
  require(r <= domain.max_radius() * (1.0 + 1e-12), errc::range_error,
          "averaging radius exceeds the sampled grid");

  const double lo = half ? 0.0 : -r;
  const double hi = r;

  double numerator = 0.0;
  double mass = 0.0;
  if (mu.has_density()) {
    Vector weighted(domain.size());
    Vector density(domain.size());
    for (int i = 0; i < domain.size(); ++i) {
      density[i] = mu.density_at(domain.point(i));
      weighted[i] = density[i] * samples[i];
    }
    numerator += piecewise_linear_integral(domain, weighted, lo, hi);
    mass += piecewise_linear_integral(domain, density, lo, hi);
  }
  for (const auto& [point, atom_mass] : mu.atoms()) {
    const double tol = 1e-12 * std::max(1.0, std::abs(point));
    if (point < lo - tol || point > hi + tol) continue;
    require(point >= domain.t0() - tol && point <= domain.t_last() + tol,
            errc::range_error, "measure atom outside the sampled grid");
    mass += atom_mass;
    if (atom_mass != 0.0) {
      numerator += atom_mass * interp_sample(domain, samples, point);
    }
  }
  require(mass > 0.0, errc::degenerate_input,
          "measure has zero mass on the averaging interval");
  return numerator / mass;
}

double ergodic_mean_measure(const SampledSignal& f, const MeasureDensity& mu,
                            double r) {
  return measure_average(f.domain(), f.norms(), mu, r);
}

double ergodic_mean(const SampledSignal& u, const ErgodicWeight& weight,
                    double radius) {
  if (std::holds_alternative<WeightSeq>(weight)) {
    return ergodic_mean_discrete(u, std::get<WeightSeq>(weight),
                                 radius_as_window(radius));
  }
  return ergodic_mean_measure(u, std::get<MeasureDensity>(weight), radius);
}

const char* to_string(ProfileVerdict v) noexcept {
  switch (v) {
    case ProfileVerdict::ErgodicConsistent: return "ergodic_consistent";
    case ProfileVerdict::NotErgodic: return "not_ergodic";
    case ProfileVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void validate_radii(const std::vector<double>& radii) {
  require(!radii.empty(), errc::invalid_input, "radius list is empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require(std::isfinite(radii[i]) && radii[i] > 0.0, errc::invalid_input,
            "radii must be positive");
    if (i > 0) {
      require(radii[i] > radii[i - 1], errc::invalid_input,
              "radii must be strictly increasing");
    }
  }
}

ProfileVerdict profile_verdict(const std::vector<double>& means,
                               double threshold, double min_decay_ratio) {
  require(!means.empty(), errc::invalid_input, "no means to judge");
  require(std::isfinite(threshold) && threshold > 0.0, errc::invalid_input,
          "threshold must be positive");
  require(min_decay_ratio > 0.0 && min_decay_ratio < 1.0, errc::invalid_input,
          "min_decay_ratio must lie in (0, 1)");
  const double mid = means[(means.size() - 1) / 2];
  const double last = means.back();
  bool all_above = true;
  for (const double m : means) {
    if (m < threshold) all_above = false;
  }
  if (last < threshold && last <= min_decay_ratio * mid) {
    return ProfileVerdict::ErgodicConsistent;
  }
  if (all_above && last > min_decay_ratio * mid) {
    return ProfileVerdict::NotErgodic;
  }
  return ProfileVerdict::Inconclusive;
}

ErgodicProfile ergodicity_profile(const SampledSignal& u,
                                  const ErgodicWeight& weight,
                                  std::vector<double> radii, double threshold,
                                  double min_decay_ratio) {
  validate_radii(radii);
  ErgodicProfile profile;
  profile.radii = std::move(radii);
  profile.threshold = threshold;
  profile.min_decay_ratio = min_decay_ratio;
  profile.means.reserve(profile.radii.size());
  for (const double r : profile.radii) {
    profile.means.push_back(ergodic_mean(u, weight, r));
  }
  profile.verdict = profile_verdict(profile.means, threshold, min_decay_ratio);
  return profile;
}

}  // namespace apergo
