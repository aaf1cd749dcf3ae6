#include "apergo/subspace.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace apergo {

Subspace Subspace::from_spanning(const Matrix& spanning) {
  require(spanning.rows() >= 1, errc::invalid_input,
          "spanning set needs a positive ambient dimension");
  require(spanning.cols() >= 1, errc::invalid_input,
          "spanning set must contain at least one vector");
  require(spanning.allFinite(), errc::invalid_input,
          "spanning vectors must be finite");
  Eigen::JacobiSVD<Matrix> svd(spanning, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cutoff = sigma.size() > 0 ? kRankTolerance * sigma[0] : 0.0;
  int rank = 0;
  while (rank < sigma.size() && sigma[rank] > cutoff && sigma[rank] > 0.0) {
    ++rank;
  }
  return Subspace(svd.matrixU().leftCols(rank));
}

Subspace Subspace::from_orthonormal(Matrix basis) {
  require(basis.rows() >= 1, errc::invalid_input,
          "basis needs a positive ambient dimension");
  require(basis.allFinite(), errc::invalid_input, "basis must be finite");
  const Matrix gram = basis.transpose() * basis;
  const double defect =
      (gram - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
  require(basis.cols() == 0 || defect <= 1e-8, errc::invalid_input,
          "basis vectors are not orthonormal");
  return Subspace(std::move(basis));
}

Subspace Subspace::zero(int ambient_dim) {
  require(ambient_dim >= 1, errc::invalid_input,
          "ambient dimension must be >= 1");
  return Subspace(Matrix::Zero(ambient_dim, 0));
}

Subspace Subspace::full(int ambient_dim) {
  require(ambient_dim >= 1, errc::invalid_input,
          "ambient dimension must be >= 1");
  return Subspace(Matrix::Identity(ambient_dim, ambient_dim));
}

Vector Subspace::project(const Eigen::Ref<const Vector>& v) const {
  require(v.size() == ambient_dim(), errc::invalid_input,
          "vector dimension does not match the ambient space");
  if (is_zero()) return Vector::Zero(ambient_dim());
  return basis_ * (basis_.transpose() * v);
}

double Subspace::distance(const Eigen::Ref<const Vector>& v) const {
  return (v - project(v)).norm();
}

bool Subspace::contains(const Eigen::Ref<const Vector>& v, double tol) const {
  return distance(v) <= tol * std::max(1.0, v.norm());
}

Vector Subspace::coordinates(const Eigen::Ref<const Vector>& v) const {
  require(v.size() == ambient_dim(), errc::invalid_input,
          "vector dimension does not match the ambient space");
  return basis_.transpose() * v;
}

Subspace sum(const Subspace& m, const Subspace& n) {
  require(m.ambient_dim() == n.ambient_dim(), errc::invalid_input,
          "subspaces live in different ambient spaces");
  if (m.is_zero() && n.is_zero()) return Subspace::zero(m.ambient_dim());
  Matrix joint(m.ambient_dim(), m.dim() + n.dim());
  joint.leftCols(m.dim()) = m.basis();
  joint.rightCols(n.dim()) = n.basis();
  return Subspace::from_spanning(joint);
}

GraphOperator::GraphOperator(Subspace domain, Matrix action)
    : domain_(std::move(domain)), action_(std::move(action)) {
  require(action_.rows() >= 1, errc::invalid_input,
          "operator codomain must have positive dimension");
  require(action_.allFinite(), errc::invalid_input,
          "operator action must be finite");
  require(static_cast<int>(action_.cols()) == domain_.dim(), errc::invalid_input,
          "action must have one column per domain basis vector");
}

Vector GraphOperator::apply(const Eigen::Ref<const Vector>& x) const {
  require(x.size() == domain_.ambient_dim(), errc::invalid_input,
          "vector dimension does not match the operator domain space");
  require(domain_.distance(x) <= 1e-10 * std::max(1.0, x.norm()),
          errc::domain_error, "vector lies outside the operator domain");
  return action_ * domain_.coordinates(x);
}

}  // namespace apergo
