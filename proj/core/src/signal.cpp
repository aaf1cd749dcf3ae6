#include "apergo/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apergo {

namespace {

constexpr int kMaxGridSize = 20'000'000;

int checked_grid_count(double r_max, double step, const char* what) {
  require(std::isfinite(r_max) && r_max > 0.0, errc::invalid_input,
          std::string(what) + ": r_max must be finite and positive");
  require(std::isfinite(step) && step > 0.0, errc::invalid_input,
          std::string(what) + ": step must be finite and positive");
  const double ratio = r_max / step;
  const double rounded = std::round(ratio);
  require(std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio),
          errc::invalid_input,
          std::string(what) + ": r_max must be an integer multiple of step");
  require(rounded >= 1.0 && rounded < kMaxGridSize, errc::invalid_input,
          std::string(what) + ": grid size out of range");
  return static_cast<int>(rounded);
}

}  // namespace

const char* to_string(DomainKind kind) noexcept {
  switch (kind) {
    case DomainKind::ZWindow: return "z_window";
    case DomainKind::RGrid: return "r_grid";
    case DomainKind::RPlusGrid: return "r_plus_grid";
  }
  return "r_grid";
}

Domain Domain::z_window(int n_max) {
  require(n_max >= 0 && n_max < kMaxGridSize / 2, errc::invalid_input,
          "z_window: n_max out of range");
  return Domain(DomainKind::ZWindow, -static_cast<double>(n_max), 1.0,
                2 * n_max + 1);
}

Domain Domain::r_grid(double r_max, double step) {
  const int half = checked_grid_count(r_max, step, "r_grid");
  require(half < kMaxGridSize / 2, errc::invalid_input, "r_grid too large");
  return Domain(DomainKind::RGrid, -r_max, step, 2 * half + 1);
}

Domain Domain::r_plus_grid(double r_max, double step) {
  const int cells = checked_grid_count(r_max, step, "r_plus_grid");
  return Domain(DomainKind::RPlusGrid, 0.0, step, cells + 1);
}

Domain Domain::from_points(const std::vector<double>& times,
                           std::optional<DomainKind> hint) {
  require(times.size() >= 2, errc::invalid_input,
          "domain needs at least two sample times");
  require(times.size() < kMaxGridSize, errc::invalid_input, "domain too large");
  const double t0 = times.front();
  const double step = times[1] - times[0];
  require(std::isfinite(t0) && std::isfinite(step) && step > 0.0,
          errc::invalid_input, "sample times must be finite and increasing");
  const double tol = 1e-9 * std::max(1.0, std::abs(step));
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double expected = t0 + step * static_cast<double>(i);
    require(std::abs(times[i] - expected) <= tol * (1.0 + std::abs(expected)),
            errc::grid_mismatch, "sample times are not uniformly spaced");
  }
  const int size = static_cast<int>(times.size());
  const double t_last = t0 + step * (size - 1);

  DomainKind kind;
  if (hint) {
    kind = *hint;
  } else {
    const bool symmetric = std::abs(t0 + t_last) <= tol * (1.0 + std::abs(t_last));
    const bool unit_integer =
        std::abs(step - 1.0) <= 1e-9 && std::abs(t0 - std::round(t0)) <= 1e-9;
    if (symmetric && unit_integer) {
      kind = DomainKind::ZWindow;
    } else if (std::abs(t0) <= tol) {
      kind = DomainKind::RPlusGrid;
    } else {
      kind = DomainKind::RGrid;
    }
  }

  if (kind == DomainKind::ZWindow) {
    require(std::abs(step - 1.0) <= 1e-9, errc::domain_error,
            "z_window requires unit step");
    require(std::abs(t0 - std::round(t0)) <= 1e-9, errc::domain_error,
            "z_window requires integer sample times");
    require(std::abs(t0 + t_last) <= 1e-9, errc::domain_error,
            "z_window requires a symmetric index range");
    return Domain(DomainKind::ZWindow, std::round(t0), 1.0, size);
  }
  if (kind == DomainKind::RPlusGrid) {
    require(std::abs(t0) <= tol, errc::domain_error,
            "r_plus_grid must start at 0");
    return Domain(DomainKind::RPlusGrid, 0.0, step, size);
  }
  return Domain(DomainKind::RGrid, t0, step, size);
}

double Domain::extent() const {
  return std::max(std::abs(t0()), std::abs(t_last()));
}

double Domain::max_radius() const {
  if (kind_ == DomainKind::RPlusGrid) return t_last();
  return std::min(std::abs(t0()), std::abs(t_last()));
}

int Domain::index_of(double t) const {
  const double raw = (t - t0_) / step_;
  const double rounded = std::round(raw);
  require(rounded >= 0.0 && rounded <= static_cast<double>(size_ - 1),
          errc::range_error, "time outside the sampled grid");
  const double snapped = t0_ + step_ * rounded;
  require(std::abs(snapped - t) <= 1e-9 * std::max(1.0, std::abs(t)),
          errc::grid_mismatch, "time does not lie on the sampling grid");
  return static_cast<int>(rounded);
}

bool Domain::same_grid(const Domain& other, double tol) const {
  if (kind_ != other.kind_ || size_ != other.size_) return false;
  const double scale = std::max({1.0, std::abs(t0_), std::abs(step_)});
  return std::abs(t0_ - other.t0_) <= tol * scale &&
         std::abs(step_ - other.step_) <= tol * scale;
}

SampledSignal::SampledSignal(Domain domain, Matrix values, NormKind kind)
    : domain_(domain), values_(std::move(values)), kind_(kind) {
  require(values_.rows() >= 1, errc::invalid_input,
          "signal values need at least one coordinate row");
  require(static_cast<int>(values_.cols()) == domain_.size(),
          errc::grid_mismatch,
          "signal has " + std::to_string(values_.cols()) +
              " samples but the domain has " + std::to_string(domain_.size()));
  require(values_.allFinite(), errc::invalid_input,
          "signal values must be finite");
}

Vector SampledSignal::norms() const {
  Vector out(size());
  for (int i = 0; i < size(); ++i) out[i] = norm_at(i);
  return out;
}

SampledSignal SampledSignal::zero(const Domain& domain, int dim, NormKind kind) {
  require(dim >= 1, errc::invalid_input, "signal dimension must be >= 1");
  return SampledSignal(domain, Matrix::Zero(dim, domain.size()), kind);
}

void require_compatible(const SampledSignal& a, const SampledSignal& b,
                        const char* context) {
  require(a.domain().same_grid(b.domain()), errc::grid_mismatch,
          std::string(context) + ": signals sampled on different grids");
  require(a.dim() == b.dim(), errc::invalid_input,
          std::string(context) + ": signals have different dimensions");
  require(a.norm_kind() == b.norm_kind(), errc::invalid_input,
          std::string(context) + ": signals carry different norms");
}

SampledSignal add(const SampledSignal& a, const SampledSignal& b) {
  require_compatible(a, b, "add");
  return SampledSignal(a.domain(), a.values() + b.values(), a.norm_kind());
}

SampledSignal subtract(const SampledSignal& a, const SampledSignal& b) {
  require_compatible(a, b, "subtract");
  return SampledSignal(a.domain(), a.values() - b.values(), a.norm_kind());
}

SampledSignal scale(const SampledSignal& a, double factor) {
  require(std::isfinite(factor), errc::invalid_input,
          "scale factor must be finite");
  return SampledSignal(a.domain(), factor * a.values(), a.norm_kind());
}

SampledSignal restrict_to_integers(const SampledSignal& f) {
  require(f.domain().kind() == DomainKind::RGrid, errc::domain_error,
          "restrict_to_integers needs a symmetric real grid");
  const int n_max = static_cast<int>(std::floor(f.domain().max_radius() + 1e-9));
  require(n_max >= 0, errc::invalid_input, "grid spans no integers");
  Matrix values(f.dim(), 2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    int idx;
    try {
      idx = f.domain().index_of(static_cast<double>(n));
    } catch (const Error&) {
      fail(errc::grid_mismatch,
           "grid does not contain the integer " + std::to_string(n));
    }
    values.col(n + n_max) = f.values().col(idx);
  }
  return SampledSignal(Domain::z_window(n_max), std::move(values),
                       f.norm_kind());
}

SampledSignal restrict_to_halfline(const SampledSignal& f) {
  require(f.domain().kind() == DomainKind::RGrid, errc::domain_error,
          "restrict_to_halfline needs a symmetric real grid");
  const int zero_idx = f.domain().index_of(0.0);
  const int count = f.size() - zero_idx;
  const Domain half =
      Domain::r_plus_grid(f.domain().t_last(), f.domain().step());
  require(half.size() == count, errc::grid_mismatch,
          "half-line grid does not line up with the source grid");
  return SampledSignal(half, f.values().rightCols(count), f.norm_kind());
}

double sup_distance(const SampledSignal& a, const SampledSignal& b) {
  require_compatible(a, b, "sup_distance");
  double best = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    best = std::max(best,
                    column_diff_norm(a.values(), i, b.values(), i, a.norm_kind()));
  }
  return best;
}

}  // namespace apergo
