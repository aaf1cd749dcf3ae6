#pragma once

#include <optional>
#include <vector>

#include "apergo/ergodic.hpp"
#include "apergo/probes.hpp"
#include "apergo/signal.hpp"

namespace apergo {

struct DecompositionBounds {
  double sup_f = 0.0;         // the retraction radius R
  double sup_g_star = 0.0;
  double max_reconstruction_residual = 0.0;  // ||f - (g* + h*)|| grid sup
  double input_consistency_residual = 0.0;   // ||f - (g + h)|| grid sup
  double factor2_max_ratio = 0.0;   // max ||h*(u)|| / ||h(u)|| where h != 0
  double factor2_max_excess = 0.0;  // max ||h*(u)|| - 2 ||h(u)||
};

struct DecompositionResult {
  SampledSignal g_star;
  SampledSignal h_star;
  double radius = 0.0;  // = bounds.sup_f
  DecompositionBounds bounds;
};

// Rewrites a decomposition f = g + h into f = g* + h* with g* the radial
// retraction of g onto the ball of radius R = sup ||f|| and h* = f - g*.
// Guarantees, re-verified before returning: exact reconstruction, sup
// ||g*|| <= R, and pointwise ||h*(u)|| <= 2 ||f(u) - g(u)||, which is
// <= 2 ||h(u)|| whenever f = g + h holds exactly.
DecompositionResult normalize_decomposition(const SampledSignal& f,
                                            const SampledSignal& g,
                                            const SampledSignal& h,
                                            const NormKind& kind);

enum class PapMode { AlmostPeriodic, AlmostAutomorphic };

const char* to_string(PapMode mode) noexcept;

struct PapValidationOptions {
  PapMode mode = PapMode::AlmostPeriodic;
  std::vector<double> radii;  // profile ladder, required
  double threshold = 1e-2;
  double min_decay_ratio = 0.5;
  APProbeOptions ap;
  std::vector<double> aa_shifts;  // required in AlmostAutomorphic mode
  AAProbeOptions aa;
};

struct PapValidationReport {
  DecompositionResult decomposition;
  std::optional<APProbeResult> ap;
  std::optional<AAProbeResult> aa;
  ErgodicProfile h_star_profile;
  ErgodicProfile h_profile;
  // max over radii of mean(h*) - 2 mean(h); the pointwise factor-2 bound
  // forces this below any quadrature tolerance
  double mean_transfer_max_excess = 0.0;
  bool mean_transfer_ok = false;
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
};

// Normalizes the candidate decomposition, probes g* for almost periodicity
// (or almost automorphy along the supplied shifts), profiles h* for
// ergodic decay, and combines the verdicts: accepted needs both the probe
// accept and an ergodic_consistent profile; a probe reject or a not_ergodic
// profile rejects; anything else is inconclusive.
PapValidationReport validate_pap_candidate(const SampledSignal& f,
                                           const SampledSignal& g,
                                           const SampledSignal& h,
                                           const ErgodicWeight& weight,
                                           double epsilon,
                                           const PapValidationOptions& options);

}  // namespace apergo
