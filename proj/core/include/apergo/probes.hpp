#pragma once

#include <vector>

#include "apergo/signal.hpp"

namespace apergo {

enum class ProbeVerdict { Accepted, Rejected, Inconclusive };

const char* to_string(ProbeVerdict v) noexcept;

struct APProbeOptions {
  // largest certified block length, as a fraction of the grid
  double block_fraction = 0.25;
  // shifts are only tested while at least this fraction of the grid overlaps
  double min_overlap = 0.5;
  // below this many testable shifts the probe reports inconclusive
  int min_shift_count = 8;
};

struct APProbeResult {
  double epsilon = 0.0;
  // smallest block length (in grid steps) such that every block of that many
  // consecutive candidate shifts contains a good one; 0 when none was found
  int window_steps = 0;
  double window_length = 0.0;  // window_steps * step, in time units
  std::vector<double> translation_numbers;  // good shifts, in time units
  std::vector<double> defects;  // sup residual of each good shift
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  int max_tested_shift = 0;   // largest shift (in steps) with enough overlap
  int max_window_steps = 0;   // block cap implied by block_fraction
};

// Scans every shift preserving at least min_overlap of the grid, collects
// those whose sup-difference over the overlap stays below epsilon, and
// reports the smallest block length covering them.  Accepted when that
// length is within the cap, rejected when no such length exists, and
// inconclusive when too few shifts are testable.
APProbeResult ap_probe(const SampledSignal& u, double epsilon,
                       const APProbeOptions& options = {});

struct AAProbeOptions {
  int min_subsequence = 2;
  int min_window_points = 8;
};

struct AAProbeResult {
  double tol = 0.0;
  std::vector<double> subsequence;        // greedily selected shifts
  std::vector<double> forward_residuals;  // per selected shift, vs the limit
  double max_forward_residual = 0.0;
  double max_backward_residual = 0.0;
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  int window_begin = 0;  // probe window as grid indices [begin, end)
  int window_end = 0;
};

// Greedy extraction of a subsequence of the given shifts along which the
// shifted signals stay pairwise within tol on a fixed probe window (the
// grid range where every input shift is observable).  The last selected
// shift defines the limit candidate g; forward residuals compare each
// selected shift against g, the backward residual compares g shifted back
// against the original signal.
AAProbeResult aa_probe(const SampledSignal& u, const std::vector<double>& shifts,
                       double tol, const AAProbeOptions& options = {});

struct C0ProbeResult {
  double threshold = 0.0;
  double tail_fraction = 0.0;
  std::vector<double> tail_sups;  // sup over dyadically shrinking tails
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
};

// Vanishing-at-infinity check on a half-line signal: accepted when the sup
// over the trailing tail_fraction of the grid is below threshold and the
// sups over dyadically halved tails never increase.
C0ProbeResult c0_probe(const SampledSignal& phi, double threshold,
                       double tail_fraction);

}  // namespace apergo
