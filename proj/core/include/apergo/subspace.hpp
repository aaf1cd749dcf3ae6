#pragma once

#include <string>

#include "apergo/norms.hpp"

namespace apergo {

inline constexpr double kRankTolerance = 1e-10;

// A linear subspace of R^d held as an orthonormal column basis (d x k).
// k = 0 encodes the zero subspace.
class Subspace {
 public:
  // Orthonormalizes the columns of `spanning`; numerical rank decided at
  // kRankTolerance relative to the largest singular value.
  static Subspace from_spanning(const Matrix& spanning);

  // Accepts an already orthonormal basis (checked to 1e-8).
  static Subspace from_orthonormal(Matrix basis);

  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int dim() const { return static_cast<int>(basis_.cols()); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }

  Vector project(const Eigen::Ref<const Vector>& v) const;
  double distance(const Eigen::Ref<const Vector>& v) const;
  bool contains(const Eigen::Ref<const Vector>& v, double tol = 1e-8) const;

  // Coordinates of v in the stored basis; v is assumed to lie in the
  // subspace (callers check with contains/distance first).
  Vector coordinates(const Eigen::Ref<const Vector>& v) const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

// Orthonormal basis of M + N.
Subspace sum(const Subspace& m, const Subspace& n);

// A linear map defined on a subspace of R^n: T(Q c) = action * c where Q is
// the orthonormal domain basis and c the domain coordinates.
class GraphOperator {
 public:
  GraphOperator(Subspace domain, Matrix action);

  const Subspace& domain() const { return domain_; }
  const Matrix& action() const { return action_; }
  int codomain_dim() const { return static_cast<int>(action_.rows()); }

  // Throws domain_error when x is not in the domain subspace (projection
  // residual above 1e-10 relative to ||x||).
  Vector apply(const Eigen::Ref<const Vector>& x) const;

 private:
  Subspace domain_;
  Matrix action_;
};

}  // namespace apergo
