#include "apergo/decomposition.hpp"

#include <algorithm>
#include <cmath>

namespace apergo {

const char* to_string(PapMode mode) noexcept {
  return mode == PapMode::AlmostPeriodic ? "almost_periodic"
                                         : "almost_automorphic";
}

DecompositionResult normalize_decomposition(const SampledSignal& f,
                                            const SampledSignal& g,
                                            const SampledSignal& h,
                                            const NormKind& kind) {
  require_compatible(f, g, "normalize_decomposition");
  require_compatible(f, h, "normalize_decomposition");

  const int n = f.size();
  const Matrix& fv = f.values();
  const Matrix& gv = g.values();
  const Matrix& hv = h.values();

  double input_residual = 0.0;
  for (int i = 0; i < n; ++i) {
    const Vector r = fv.col(i) - gv.col(i) - hv.col(i);
    input_residual = std::max(input_residual, norm(r, kind));
  }
  require(input_residual <= 1e-10, errc::inconsistent_decomposition,
          "f - (g + h) exceeds the 1e-10 consistency tolerance");

  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, norm(fv.col(i), kind));

  Matrix g_star(f.dim(), n);
  for (int i = 0; i < n; ++i) {
    g_star.col(i) = radial_retraction(gv.col(i), radius, kind);
  }
  Matrix h_star = fv - g_star;

  DecompositionBounds bounds;
  bounds.sup_f = radius;
  bounds.input_consistency_residual = input_residual;
  Vector buffer(f.dim());
  for (int i = 0; i < n; ++i) {
    bounds.sup_g_star = std::max(bounds.sup_g_star, norm(g_star.col(i), kind));
    const double hs = norm(h_star.col(i), kind);
    const double hn = norm(hv.col(i), kind);
    const double fg = column_diff_norm(fv, i, gv, i, kind);
    bounds.factor2_max_excess =
        std::max(bounds.factor2_max_excess, hs - 2.0 * hn);
    if (hn > 0.0) {
      bounds.factor2_max_ratio = std::max(bounds.factor2_max_ratio, hs / hn);
    }
    // provable pointwise bound; holds whatever the (tolerated) input drift
    require(hs <= 2.0 * fg + 1e-12, errc::numerical,
            "pointwise factor-2 bound failed");
    buffer = fv.col(i) - g_star.col(i) - h_star.col(i);
    bounds.max_reconstruction_residual =
        std::max(bounds.max_reconstruction_residual, norm(buffer, kind));
  }
  require(bounds.max_reconstruction_residual <= 1e-12, errc::numerical,
          "reconstruction residual exceeds 1e-12");
  require(bounds.sup_g_star <= radius + 1e-12, errc::numerical,
          "retracted part exceeds the radius bound");

  return DecompositionResult{
      SampledSignal(f.domain(), std::move(g_star), kind),
      SampledSignal(f.domain(), std::move(h_star), kind), radius, bounds};
}

PapValidationReport validate_pap_candidate(const SampledSignal& f,
                                           const SampledSignal& g,
                                           const SampledSignal& h,
                                           const ErgodicWeight& weight,
                                           double epsilon,
                                           const PapValidationOptions& options) {
  require(std::isfinite(epsilon) && epsilon > 0.0, errc::invalid_input,
          "epsilon must be positive");
  validate_radii(options.radii);

  PapValidationReport report{
      normalize_decomposition(f, g, h, f.norm_kind()),
      std::nullopt,
      std::nullopt,
      {},
      {},
      0.0,
      false,
      ProbeVerdict::Inconclusive};

  ProbeVerdict probe_verdict;
  if (options.mode == PapMode::AlmostPeriodic) {
    report.ap = ap_probe(report.decomposition.g_star, epsilon, options.ap);
    probe_verdict = report.ap->verdict;
  } else {
    require(!options.aa_shifts.empty(), errc::invalid_input,
            "almost-automorphic validation needs a shift list");
    report.aa = aa_probe(report.decomposition.g_star, options.aa_shifts,
                         epsilon, options.aa);
    probe_verdict = report.aa->verdict;
  }

  report.h_star_profile =
      ergodicity_profile(report.decomposition.h_star, weight, options.radii,
                         options.threshold, options.min_decay_ratio);
  report.h_profile = ergodicity_profile(h, weight, options.radii,
                                        options.threshold,
                                        options.min_decay_ratio);

  double max_excess = 0.0;
  for (std::size_t i = 0; i < options.radii.size(); ++i) {
    max_excess = std::max(max_excess, report.h_star_profile.means[i] -
                                          2.0 * report.h_profile.means[i]);
  }
  report.mean_transfer_max_excess = max_excess;
  report.mean_transfer_ok = max_excess <= 1e-12;

  const ProfileVerdict ergodic = report.h_star_profile.verdict;
  if (probe_verdict == ProbeVerdict::Accepted &&
      ergodic == ProfileVerdict::ErgodicConsistent) {
    report.verdict = ProbeVerdict::Accepted;
  } else if (probe_verdict == ProbeVerdict::Rejected ||
             ergodic == ProfileVerdict::NotErgodic) {
    report.verdict = ProbeVerdict::Rejected;
  } else {
    report.verdict = ProbeVerdict::Inconclusive;
  }
  return report;
}

}  // namespace apergo
