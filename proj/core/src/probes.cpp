#include "apergo/probes.hpp"

#include <algorithm>
#include <cmath>

namespace apergo {

namespace {

// sup over i in [lo, hi] of ||u(i + a) - u(i + b)||.
double shifted_sup_distance(const SampledSignal& u, int a, int b, int lo,
                            int hi) {
  const Matrix& v = u.values();
  double best = 0.0;
  for (int i = lo; i <= hi; ++i) {
    best = std::max(best, column_diff_norm(v, i + a, v, i + b, u.norm_kind()));
  }
  return best;
}

}  // namespace

const char* to_string(ProbeVerdict v) noexcept {
  switch (v) {
    case ProbeVerdict::Accepted: return "accepted";
    case ProbeVerdict::Rejected: return "rejected";
    case ProbeVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

APProbeResult ap_probe(const SampledSignal& u, double epsilon,
                       const APProbeOptions& options) {
  require(std::isfinite(epsilon) && epsilon > 0.0, errc::invalid_input,
          "epsilon must be positive");
  require(options.block_fraction > 0.0 && options.block_fraction <= 1.0,
          errc::invalid_input, "block_fraction must lie in (0, 1]");
  require(options.min_overlap > 0.0 && options.min_overlap < 1.0,
          errc::invalid_input, "min_overlap must lie in (0, 1)");
  require(options.min_shift_count >= 1, errc::invalid_input,
          "min_shift_count must be >= 1");
  const int n = u.size();
  require(n >= 16, errc::invalid_input,
          "grid too short for a translation-number scan");

  APProbeResult result;
  result.epsilon = epsilon;
  result.max_tested_shift =
      static_cast<int>(std::floor((1.0 - options.min_overlap) * n));
  result.max_window_steps = std::min(
      result.max_tested_shift,
      static_cast<int>(std::floor(options.block_fraction * n)));

  if (result.max_tested_shift < options.min_shift_count) {
    result.verdict = ProbeVerdict::Inconclusive;
    return result;
  }

  std::vector<int> good;
  for (int p = 1; p <= result.max_tested_shift; ++p) {
    const double defect = shifted_sup_distance(u, p, 0, 0, n - 1 - p);
    if (defect < epsilon) {
      good.push_back(p);
      result.translation_numbers.push_back(p * u.domain().step());
      result.defects.push_back(defect);
    }
  }

  if (good.empty()) {
    result.verdict = ProbeVerdict::Rejected;
    return result;
  }

  // A block of w consecutive candidate shifts {m, ..., m + w - 1} must catch
  // a good shift for every placement inside [1, max_tested_shift]; the
  // smallest such w is the largest hole in the good set.
  int needed = good.front();
  for (std::size_t i = 1; i < good.size(); ++i) {
    needed = std::max(needed, good[i] - good[i - 1]);
  }
  needed = std::max(needed, result.max_tested_shift - good.back() + 1);

  result.window_steps = needed;
  result.window_length = needed * u.domain().step();
  result.verdict = needed <= result.max_window_steps
                       ? ProbeVerdict::Accepted
                       : ProbeVerdict::Rejected;
  return result;
}

AAProbeResult aa_probe(const SampledSignal& u, const std::vector<double>& shifts,
                       double tol, const AAProbeOptions& options) {
  require(std::isfinite(tol) && tol > 0.0, errc::invalid_input,
          "tol must be positive");
  require(!shifts.empty(), errc::invalid_input, "shift list is empty");
  require(options.min_subsequence >= 2, errc::invalid_input,
          "min_subsequence must be >= 2");
  const int n = u.size();
  const double step = u.domain().step();

  std::vector<int> steps;
  steps.reserve(shifts.size());
  for (const double s : shifts) {
    const double raw = s / step;
    const double rounded = std::round(raw);
    require(std::abs(raw - rounded) <= 1e-9 * std::max(1.0, std::abs(raw)),
            errc::grid_mismatch, "shift is not a multiple of the grid step");
    require(std::abs(rounded) <= n - 1.0, errc::range_error,
            "shift exceeds the testable range");
    steps.push_back(static_cast<int>(rounded));
  }

  // window where every input shift stays on the grid
  int lo = 0;
  int hi = n - 1;
  for (const int k : steps) {
    lo = std::max(lo, -k);
    hi = std::min(hi, n - 1 - k);
  }

  AAProbeResult result;
  result.tol = tol;
  result.window_begin = lo;
  result.window_end = hi + 1;
  if (hi - lo + 1 < options.min_window_points) {
    result.verdict = ProbeVerdict::Inconclusive;
    return result;
  }

  // Greedy clique extraction; a bad early shift would block everything
  // after it, so the longest chain over all starting positions wins (ties
  // to the earliest start).
  std::vector<int> best_chain;
  for (std::size_t start = 0; start < steps.size(); ++start) {
    std::vector<int> chain{steps[start]};
    for (std::size_t j = start + 1; j < steps.size(); ++j) {
      bool close = true;
      for (const int member : chain) {
        if (shifted_sup_distance(u, steps[j], member, lo, hi) > tol) {
          close = false;
          break;
        }
      }
      if (close) chain.push_back(steps[j]);
    }
    if (chain.size() > best_chain.size()) best_chain = chain;
  }

  for (const int k : best_chain) result.subsequence.push_back(k * step);

  // forward: each selected shift against the limit candidate g = u(. + last)
  const int last = best_chain.back();
  for (const int k : best_chain) {
    const double r = shifted_sup_distance(u, k, last, lo, hi);
    result.forward_residuals.push_back(r);
    result.max_forward_residual = std::max(result.max_forward_residual, r);
  }

  if (static_cast<int>(best_chain.size()) < options.min_subsequence) {
    result.verdict = ProbeVerdict::Rejected;
    return result;
  }

  // backward: g(. - k) against u wherever both stay inside the grid;
  // g(w - k) = u(w - k + last) for window positions w, compared at u(w)
  for (const int k : best_chain) {
    const int blo = std::max(lo, lo + k);
    const int bhi = std::min(hi, hi + k);
    if (bhi < blo) continue;
    const double r = shifted_sup_distance(u, last - k, 0, blo, bhi);
    result.max_backward_residual = std::max(result.max_backward_residual, r);
  }

  const bool ok = result.max_forward_residual <= tol &&
                  result.max_backward_residual <= tol;
  result.verdict = ok ? ProbeVerdict::Accepted : ProbeVerdict::Rejected;
  return result;
}

C0ProbeResult c0_probe(const SampledSignal& phi, double threshold,
                       double tail_fraction) {
  require(phi.domain().kind() == DomainKind::RPlusGrid, errc::domain_error,
          "c0_probe needs a half-line signal");
  require(std::isfinite(threshold) && threshold > 0.0, errc::invalid_input,
          "threshold must be positive");
  require(tail_fraction > 0.0 && tail_fraction < 1.0, errc::invalid_input,
          "tail_fraction must lie in (0, 1)");

  C0ProbeResult result;
  result.threshold = threshold;
  result.tail_fraction = tail_fraction;

  const int n = phi.size();
  const Vector norms = phi.norms();
  double fraction = tail_fraction;
  while (true) {
    const int count = static_cast<int>(std::ceil(fraction * n));
    if (count < 2) break;
    const int start = n - count;
    result.tail_sups.push_back(norms.tail(n - start).maxCoeff());
    fraction *= 0.5;
  }
  require(!result.tail_sups.empty(), errc::invalid_input,
          "grid too short for the requested tail_fraction");

  bool monotone = true;
  for (std::size_t i = 1; i < result.tail_sups.size(); ++i) {
    if (result.tail_sups[i] > result.tail_sups[i - 1] + 1e-12) monotone = false;
  }
  const bool small = result.tail_sups.front() < threshold;
  result.verdict = (small && monotone) ? ProbeVerdict::Accepted
                                       : ProbeVerdict::Rejected;
  return result;
}

}  // namespace apergo
