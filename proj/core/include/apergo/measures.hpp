#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "apergo/norms.hpp"
#include "apergo/signal.hpp"

namespace apergo {

// Nonnegative averaging weights p_n on the integer window [-n_max, n_max].
class WeightSeq {
 public:
  explicit WeightSeq(Vector weights);

  static WeightSeq uniform(int n_max);

  // 1 on odd indices, 0 on even indices (or the mirrored pattern).  Useful
  // for weights that vanish exactly where a signal is supported.
  static WeightSeq alternating(int n_max, bool ones_on_odd = true);

  int n_max() const { return n_max_; }
  const Vector& weights() const { return weights_; }

  // p_n for n in [-n_max, n_max].
  double at(int n) const;

  // sum of p_n over |n| <= window.
  double window_sum(int window) const;

 private:
  Vector weights_;
  int n_max_;
};

enum class MeasureSide { Line, HalfLine };

const char* to_string(MeasureSide side) noexcept;

// A positive measure on the line (or half-line) given as a density that is
// either constant or sampled on a grid, plus optional point atoms.  The
// density is integrated with the trapezoid rule against signal samples, the
// atoms exactly.
class MeasureDensity {
 public:
  static MeasureDensity lebesgue(MeasureSide side = MeasureSide::Line);
  static MeasureDensity constant(double value, MeasureSide side = MeasureSide::Line);
  static MeasureDensity sampled(std::vector<double> times, std::vector<double> values,
                                MeasureSide side = MeasureSide::Line);
  static MeasureDensity atoms_only(MeasureSide side = MeasureSide::Line);

  // Unit atoms at every integer in [-n_max, n_max] (or [0, n_max] on the
  // half-line); the counting-measure embedding of discrete averaging.
  static MeasureDensity unit_atoms_on_integers(int n_max, MeasureSide side = MeasureSide::Line);

  MeasureDensity& add_atom(double point, double mass);

  MeasureSide side() const { return side_; }
  bool has_density() const { return !constant_ || constant_value_ != 0.0; }
  bool is_constant() const { return constant_; }
  double constant_value() const { return constant_value_; }

  // Density value at t; sampled densities interpolate linearly inside their
  // grid and are 0 outside it.
  double density_at(double t) const;

  const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

 private:
  explicit MeasureDensity(MeasureSide side) : side_(side) {}

  MeasureSide side_;
  bool constant_ = true;
  double constant_value_ = 0.0;
  std::vector<double> grid_;
  std::vector<double> values_;
  std::vector<std::pair<double, double>> atoms_;
};

// Either way of weighting an ergodic mean: a discrete weight sequence for
// integer-indexed signals or a measure for sampled real-line signals.
using ErgodicWeight = std::variant<WeightSeq, MeasureDensity>;

}  // namespace apergo
