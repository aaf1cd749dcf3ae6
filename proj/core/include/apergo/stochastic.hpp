#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apergo/ergodic.hpp"
#include "apergo/measures.hpp"
#include "apergo/signal.hpp"

namespace apergo {

// K Monte Carlo sample paths of an R^d-valued process on a shared grid,
// stored stacked: draw k occupies rows [k*d, (k+1)*d).  Expectations are
// sample means over the draws; the seed is carried for report provenance.
class ProcessEnsemble {
 public:
  ProcessEnsemble(Domain domain, Matrix stacked, int draws, std::uint64_t seed);

  // x_k(t) = sigma(t) * Z_k with one standard normal vector Z_k per draw,
  // shared across the whole grid, so shifted paths stay comparable.
  static ProcessEnsemble gaussian_scaled(
      const Domain& domain, const std::function<double(double)>& sigma,
      int draws, int dim, std::uint64_t seed);

  // Every draw equal to the given deterministic signal.
  static ProcessEnsemble deterministic(const SampledSignal& f, int draws,
                                       std::uint64_t seed);

  const Domain& domain() const { return domain_; }
  int draws() const { return draws_; }
  int dim() const { return dim_; }
  std::uint64_t seed() const { return seed_; }
  const Matrix& stacked() const { return stacked_; }

  // Empirical second moment at grid index i: mean over draws of the squared
  // euclidean norm, compensated summation.
  double second_moment_at(int i) const;
  Vector second_moments() const;
  double sup_second_moment() const;

  // Suggested relative Monte Carlo tolerance for second-moment statistics
  // of gaussian-type draws: 3 / sqrt(2 K).
  double mc_rel_tol() const;

 private:
  Domain domain_;
  Matrix stacked_;
  int draws_;
  int dim_;
  std::uint64_t seed_;
};

// Empirical L2 norm at a grid time: root-mean-square over draws of the
// euclidean norm.  Throws range_error when t is off the grid.
double l2_norm_at(const ProcessEnsemble& x, double t);

enum class SmForm { Squared, Root };

const char* to_string(SmForm form) noexcept;

// Measure average over the radius-r interval of the empirical second
// moment (Squared) or its square root (Root).
double sm_ergodic_mean(const ProcessEnsemble& x, const MeasureDensity& mu,
                       double r, SmForm form);

struct EquivalenceReport {
  std::vector<double> radii;
  std::vector<double> squared_means;
  std::vector<double> root_means;
  double sup_second_moment = 0.0;  // M, grid sup of the empirical moment
  // max over radii of (root mean)^2 - squared mean; convexity of the
  // common quadrature makes this nonpositive up to rounding
  double cauchy_schwarz_max_excess = 0.0;
  // max over radii of squared mean - sqrt(M) * root mean
  double bounded_max_excess = 0.0;
  bool cauchy_schwarz_ok = false;
  bool bounded_ok = false;
  ProfileVerdict squared_verdict = ProfileVerdict::Inconclusive;
  ProfileVerdict root_verdict = ProfileVerdict::Inconclusive;
  double threshold = 0.0;
  double min_decay_ratio = 0.0;
  double mc_rel_tol = 0.0;
};

// Evaluates both square-mean profiles on the radius ladder and checks the
// two inequalities tying them together, each at slack 1e-10.
EquivalenceReport equivalence_check(const ProcessEnsemble& x,
                                    const MeasureDensity& mu,
                                    std::vector<double> radii,
                                    double threshold = 1e-2,
                                    double min_decay_ratio = 0.5);

// The (K*d)-dimensional euclidean signal t -> (all draws stacked) / sqrt(K),
// whose pointwise norm equals the empirical L2 norm, so the deterministic
// probes and means realize the square-mean notions on it.
SampledSignal reduce_to_signal(const ProcessEnsemble& x);

}  // namespace apergo
