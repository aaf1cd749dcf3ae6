#include "apergo/measures.hpp"

#include <algorithm>
#include <cmath>

namespace apergo {

WeightSeq::WeightSeq(Vector weights) : weights_(std::move(weights)) {
  require(weights_.size() >= 1 && weights_.size() % 2 == 1, errc::invalid_input,
          "weight sequence must cover a symmetric window [-n_max, n_max]");
  require(weights_.allFinite() && weights_.minCoeff() >= 0.0, errc::invalid_input,
          "weights must be finite and nonnegative");
  n_max_ = static_cast<int>(weights_.size() / 2);
}

WeightSeq WeightSeq::uniform(int n_max) {
  require(n_max >= 0, errc::invalid_input, "n_max must be nonnegative");
  return WeightSeq(Vector::Ones(2 * n_max + 1));
}

WeightSeq WeightSeq::alternating(int n_max, bool ones_on_odd) {
  require(n_max >= 0, errc::invalid_input, "n_max must be nonnegative");
  Vector w = Vector::Zero(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    const bool odd = (n % 2) != 0;
    if (odd == ones_on_odd) w[n + n_max] = 1.0;
  }
  return WeightSeq(std::move(w));
}

double WeightSeq::at(int n) const {
  require(n >= -n_max_ && n <= n_max_, errc::range_error,
          "weight index outside [-n_max, n_max]");
  return weights_[n + n_max_];
}

double WeightSeq::window_sum(int window) const {
  require(window >= 0 && window <= n_max_, errc::range_error,
          "window exceeds the stored weight range");
  double sum = 0.0;
  for (int n = -window; n <= window; ++n) sum += at(n);
  return sum;
}

const char* to_string(MeasureSide side) noexcept {
  return side == MeasureSide::Line ? "line" : "half_line";
}

MeasureDensity MeasureDensity::lebesgue(MeasureSide side) {
  return constant(1.0, side);
}

MeasureDensity MeasureDensity::constant(double value, MeasureSide side) {
  require(std::isfinite(value) && value >= 0.0, errc::invalid_input,
          "constant density must be finite and nonnegative");
  MeasureDensity m(side);
  m.constant_ = true;
  m.constant_value_ = value;
  return m;
}

MeasureDensity MeasureDensity::sampled(std::vector<double> times,
                                       std::vector<double> values,
                                       MeasureSide side) {
  require(times.size() == values.size() && times.size() >= 2, errc::invalid_input,
          "sampled density needs matching time/value arrays of length >= 2");
  for (std::size_t i = 0; i < times.size(); ++i) {
    require(std::isfinite(times[i]) && std::isfinite(values[i]),
            errc::invalid_input, "sampled density must be finite");
    require(values[i] >= 0.0, errc::invalid_input,
            "sampled density must be nonnegative");
    if (i > 0) {
      require(times[i] > times[i - 1], errc::invalid_input,
              "sampled density times must be strictly increasing");
    }
  }
  MeasureDensity m(side);
  m.constant_ = false;
  m.grid_ = std::move(times);
  m.values_ = std::move(values);
  return m;
}

MeasureDensity MeasureDensity::atoms_only(MeasureSide side) {
  return constant(0.0, side);
}

MeasureDensity MeasureDensity::unit_atoms_on_integers(int n_max, MeasureSide side) {
  require(n_max >= 0, errc::invalid_input, "n_max must be nonnegative");
  MeasureDensity m = atoms_only(side);
  const int lo = side == MeasureSide::HalfLine ? 0 : -n_max;
  for (int n = lo; n <= n_max; ++n) m.add_atom(static_cast<double>(n), 1.0);
  return m;
}

MeasureDensity& MeasureDensity::add_atom(double point, double mass) {
  require(std::isfinite(point) && std::isfinite(mass) && mass >= 0.0,
          errc::invalid_input, "atom must have finite location and mass >= 0");
  require(side_ == MeasureSide::Line || point >= 0.0, errc::domain_error,
          "half-line measure cannot carry atoms at negative times");
  atoms_.emplace_back(point, mass);
  std::sort(atoms_.begin(), atoms_.end());
  return *this;
}

double MeasureDensity::density_at(double t) const {
  if (constant_) return constant_value_;
  if (t <= grid_.front()) return t == grid_.front() ? values_.front() : 0.0;
  if (t >= grid_.back()) return t == grid_.back() ? values_.back() : 0.0;
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), t);
  const std::size_t hi = static_cast<std::size_t>(it - grid_.begin());
  const std::size_t lo = hi - 1;
  const double w = (t - grid_[lo]) / (grid_[hi] - grid_[lo]);
  return (1.0 - w) * values_[lo] + w * values_[hi];
}

}  // namespace apergo
