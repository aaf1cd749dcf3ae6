#pragma once

#include <vector>

#include "apergo/measures.hpp"
#include "apergo/signal.hpp"

namespace apergo {

// Weighted average of ||u(n)|| over the integer window [-window, window]:
// sum of p_n ||u(n)|| divided by sum of p_n.  Throws degenerate_input when
// the weights sum to zero on the window.
double ergodic_mean_discrete(const SampledSignal& u, const WeightSeq& p,
                             int window);

// Average of ||f|| against the measure over [-r, r] (line) or [0, r]
// (half-line).  The density part is integrated by the trapezoid rule on the
// signal grid with linear interpolation at the interval ends; atoms inside
// the closed interval contribute exactly.
double ergodic_mean_measure(const SampledSignal& f, const MeasureDensity& mu,
                            double r);

// Dispatches on the weight alternative; discrete weights require a ZWindow
// signal and integer radii.
double ergodic_mean(const SampledSignal& u, const ErgodicWeight& weight,
                    double radius);

// The quadrature underneath ergodic_mean_measure, usable for any per-point
// nonnegative samples on the grid (e.g. empirical moments): the mu-average
// of the piecewise-linear interpolant of `samples` over the radius-r
// interval.  The result is a convex combination of the samples.
double measure_average(const Domain& domain, const Vector& samples,
                       const MeasureDensity& mu, double r);

enum class ProfileVerdict { ErgodicConsistent, NotErgodic, Inconclusive };

const char* to_string(ProfileVerdict v) noexcept;

struct ErgodicProfile {
  std::vector<double> radii;
  std::vector<double> means;
  ProfileVerdict verdict = ProfileVerdict::Inconclusive;
  double threshold = 0.0;
  double min_decay_ratio = 0.0;
};

// Verdict rule shared by every profile: ergodic_consistent when the final
// mean is below threshold and has decayed to at most min_decay_ratio times
// the mean at the start of the last half of the ladder, not_ergodic when
// every mean sits at or above threshold with no such decay, inconclusive
// otherwise.
ProfileVerdict profile_verdict(const std::vector<double>& means,
                               double threshold, double min_decay_ratio);

// Means over an increasing ladder of radii plus the finite-horizon verdict.
ErgodicProfile ergodicity_profile(const SampledSignal& u,
                                  const ErgodicWeight& weight,
                                  std::vector<double> radii,
                                  double threshold = 1e-2,
                                  double min_decay_ratio = 0.5);

void validate_radii(const std::vector<double>& radii);

}  // namespace apergo
