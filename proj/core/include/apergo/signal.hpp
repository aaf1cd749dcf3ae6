#pragma once

#include <optional>
#include <vector>

#include "apergo/norms.hpp"

namespace apergo {

enum class DomainKind { ZWindow, RGrid, RPlusGrid };

const char* to_string(DomainKind kind) noexcept;

// Uniform sampling grid: integers in [-n_max, n_max], a symmetric real grid
// [-r_max, r_max], or a half-line grid [0, r_max].  Stored as t0 + i * step.
class Domain {
 public:
  static Domain z_window(int n_max);
  static Domain r_grid(double r_max, double step);
  static Domain r_plus_grid(double r_max, double step);

  // Reconstructs a domain from explicit sample times (ascending, uniformly
  // spaced).  Without a hint the kind is inferred: step-1 integer symmetric
  // grids become ZWindow, grids starting at 0 become RPlusGrid, anything
  // else RGrid.
  static Domain from_points(const std::vector<double>& times,
                            std::optional<DomainKind> hint = {});

  DomainKind kind() const { return kind_; }
  double t0() const { return t0_; }
  double step() const { return step_; }
  int size() const { return size_; }

  double point(int i) const { return t0_ + step_ * i; }
  double t_last() const { return point(size_ - 1); }

  // Largest |t| over the grid; the natural cap for averaging radii.
  double extent() const;

  // Largest r such that the averaging interval (symmetric or one-sided,
  // depending on kind) stays inside the grid.
  double max_radius() const;

  // Exact grid point lookup; throws range_error when t is outside the grid
  // and grid_mismatch when t falls between grid points.
  int index_of(double t) const;

  bool same_grid(const Domain& other, double tol = 1e-9) const;

 private:
  Domain(DomainKind kind, double t0, double step, int size)
      : kind_(kind), t0_(t0), step_(step), size_(size) {}

  DomainKind kind_;
  double t0_;
  double step_;
  int size_;
};

// A bounded vector-valued function sampled on a Domain.  Values are stored
// one column per grid point, and every signal carries the norm its value
// space is measured in.
class SampledSignal {
 public:
  SampledSignal(Domain domain, Matrix values, NormKind kind);

  const Domain& domain() const { return domain_; }
  int dim() const { return static_cast<int>(values_.rows()); }
  int size() const { return static_cast<int>(values_.cols()); }
  const Matrix& values() const { return values_; }
  Matrix& values() { return values_; }
  const NormKind& norm_kind() const { return kind_; }

  double time(int i) const { return domain_.point(i); }
  double norm_at(int i) const { return norm(values_.col(i), kind_); }

  // Per-point norms, in grid order.
  Vector norms() const;

  double sup_norm() const { return norms().maxCoeff(); }

  static SampledSignal zero(const Domain& domain, int dim, NormKind kind);

 private:
  Domain domain_;
  Matrix values_;
  NormKind kind_;
};

SampledSignal add(const SampledSignal& a, const SampledSignal& b);
SampledSignal subtract(const SampledSignal& a, const SampledSignal& b);
SampledSignal scale(const SampledSignal& a, double factor);

// sup over the common grid of ||a(t) - b(t)||.
double sup_distance(const SampledSignal& a, const SampledSignal& b);

// Throws grid_mismatch / invalid_input unless the two signals share grid,
// dimension, and norm kind.
void require_compatible(const SampledSignal& a, const SampledSignal& b,
                        const char* context);

// Samples at integer times copied onto a symmetric integer window.  The
// grid must contain every integer of [-floor(r), floor(r)]; throws
// grid_mismatch otherwise.
SampledSignal restrict_to_integers(const SampledSignal& f);

// Samples at nonnegative times copied onto a half-line grid.
SampledSignal restrict_to_halfline(const SampledSignal& f);

}  // namespace apergo
