#pragma once

#include <cstdint>

#include "apergo/norms.hpp"

namespace apergo::oracle {

// Brute-force counterparts of the subspace constants.  They share no
// factorization code with the closed-form paths: orthonormalization is
// modified Gram-Schmidt, linear systems go through Gaussian elimination,
// minima come from random scans plus derivative-free parabola descent, and
// extremal eigenvalues from cyclic Jacobi sweeps.  Slower and simpler on
// purpose; used to cross-check the library results.

// Orthonormal basis of the column span (modified Gram-Schmidt with
// re-orthogonalization); columns below rel_tol * (largest column norm) are
// dropped.
Matrix orthonormalize(const Matrix& cols, double rel_tol = 1e-10);

// Basis of { w : A w = 0 } from the reduced row echelon form.
Matrix elimination_nullspace(const Matrix& a);

struct LinearSolve {
  Vector solution;
  bool consistent = false;
  double residual = 0.0;
};

// One solution of A w = b with free variables set to 0.
LinearSolve elimination_solve(const Matrix& a, const Vector& b);

// Minimizer of ||x0 + K c|| over c: random scan followed by coordinate
// parabola fits.  Returns the minimizing vector x0 + K c*.
Vector min_over_affine(const Vector& x0, const Matrix& kernel_cols,
                       std::uint64_t seed, int samples = 64, int cycles = 8);

// Largest eigenvalue of a symmetric positive semidefinite matrix.
double gram_lambda_max(const Matrix& gram);

Vector min_norm_preimage_search(const Matrix& l, const Vector& y,
                                std::uint64_t seed);

double quotient_norm_search(const Matrix& l, const Vector& x,
                            std::uint64_t seed);

double range_constant_search(const Matrix& l, std::uint64_t seed);

// Least-norm M-component of a decomposition z = x + y over spanning sets
// (columns) of M and N.
Vector sum_component_search(const Matrix& m_span, const Matrix& n_span,
                            const Vector& z, std::uint64_t seed);

double sum_constant_search(const Matrix& m_span, const Matrix& n_span,
                           std::uint64_t seed);

// Dense sweep over the unit circle of a two-dimensional M + N with
// golden-section refinement around the best angle.
double sum_constant_sweep_2d(const Matrix& m_span, const Matrix& n_span,
                             int grid = 4096);

}  // namespace apergo::oracle
