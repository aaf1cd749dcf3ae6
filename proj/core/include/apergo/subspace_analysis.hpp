#pragma once

#include <cstdint>
#include <string>

#include "apergo/subspace.hpp"

namespace apergo {

struct ConstantWitness {
  Vector z;  // unit input achieving (near-)equality in the bound
  Vector x;  // attaining preimage / first summand
  Vector y;  // second summand for subspace sums; empty otherwise
};

// Best constant c of a bounded-selection statement together with the
// decomposition constant d = c + 1 it induces.
struct ConstantReport {
  double constant_c = 0.0;
  double d = 0.0;
  ConstantWitness witness;
  std::string method = "closed_form";
  double rank_tolerance = kRankTolerance;
};

// Least-euclidean-norm solution of L x = y.  Throws not_in_range when the
// least-squares residual exceeds tol * ||y||.
Vector min_norm_preimage(const Matrix& L, const Eigen::Ref<const Vector>& y,
                         double tol = 1e-8);

// Smallest c such that every y in Im L admits a preimage with
// ||x|| <= c ||y||; the reciprocal of the smallest nonzero singular value.
// Throws degenerate_input for the zero operator.
ConstantReport range_constant(const Matrix& L);

// Distance from x to Ker L: the norm of the class of x in E / Ker L.
double quotient_norm(const Matrix& L, const Eigen::Ref<const Vector>& x);

// ||x|| + ||T(x)||, the graph norm on the operator domain.
double graph_norm(const GraphOperator& T, const Eigen::Ref<const Vector>& x);

// range_constant of the operator restricted to its domain subspace.  The
// reported d = c + 1 bounds the graph norm of the selected preimage:
// ||x|| + ||T(x)|| <= d ||y||.
ConstantReport graph_range_constant(const GraphOperator& T);

// Smallest c such that every z in M + N splits as z = x + y with x in M,
// y in N and ||x|| <= c ||z||.  Closed form: the inner minimum is linear in
// z, so c is the largest singular value of that map on M + N.  d = c + 1
// gives the two-sided bound ||y|| <= d ||z||.
// When M is contained in N the constant degenerates to 0 (x = 0 always
// works); callers that need a positive constant should treat that case as
// degenerate.
ConstantReport sum_constant(const Subspace& m, const Subspace& n);

// Monte Carlo cross-check of sum_constant: random unit z in M + N plus a
// local refinement pass; method field reads "sampled".
ConstantReport sum_constant_sampled(const Subspace& m, const Subspace& n,
                                    std::uint64_t seed, int samples = 4096);

// Least-norm x with x in M and z - x in N; the inner minimization behind
// sum_constant.  Throws not_in_range when z is not in M + N.
Vector sum_min_norm_component(const Subspace& m, const Subspace& n,
                              const Eigen::Ref<const Vector>& z);

}  // namespace apergo
