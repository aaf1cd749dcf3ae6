#pragma once

// Shared generators and comparison helpers for the property tests.  All
// randomness flows through apergo::Rng with explicit seeds, so every loop is
// reproducible.

#include <apergo/norms.hpp>
#include <apergo/rng.hpp>
#include <apergo/signal.hpp>
#include <apergo/subspace.hpp>
#include <cmath>
#include <vector>

namespace test {

inline apergo::Vector random_vector(apergo::Rng& rng, int dim,
                                    double scale = 1.0) {
  apergo::Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = scale * rng.normal();
  return v;
}

inline apergo::Vector random_nonzero(apergo::Rng& rng, int dim,
                                     double scale = 1.0) {
  for (;;) {
    apergo::Vector v = random_vector(rng, dim, scale);
    if (v.norm() > 1e-6 * scale) return v;
  }
}

inline apergo::Matrix random_matrix(apergo::Rng& rng, int rows, int cols,
                                    double scale = 1.0) {
  apergo::Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = scale * rng.normal();
  }
  return m;
}

// rows x cols with the given exact rank, built as a product of full-rank
// factors.
inline apergo::Matrix random_rank_matrix(apergo::Rng& rng, int rows, int cols,
                                         int rank) {
  return random_matrix(rng, rows, rank) * random_matrix(rng, rank, cols);
}

inline apergo::Subspace random_subspace(apergo::Rng& rng, int ambient_dim,
                                        int dim) {
  return apergo::Subspace::from_spanning(
      random_matrix(rng, ambient_dim, dim));
}

inline apergo::SampledSignal scalar_signal(
    const apergo::Domain& d, const std::vector<double>& values,
    apergo::NormKind kind = apergo::NormKind::euclidean()) {
  apergo::Matrix m(1, static_cast<int>(values.size()));
  for (int i = 0; i < m.cols(); ++i) m(0, i) = values[static_cast<std::size_t>(i)];
  return apergo::SampledSignal(d, std::move(m), kind);
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline apergo::NormKind norm_kind_for(int which) {
  switch (which % 3) {
    case 0: return apergo::NormKind::euclidean();
    case 1: return apergo::NormKind::p_norm(1.0);
    default: return apergo::NormKind::sup();
  }
}

}  // namespace test
