#include "apergo/subspace_analysis.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "apergo/rng.hpp"

namespace apergo {

namespace {

struct ThinSvd {
  Matrix u;
  Matrix v;
  Vector sigma;
  int rank = 0;
};

ThinSvd decompose(const Matrix& a) {
  ThinSvd out;
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.u = svd.matrixU();
  out.v = svd.matrixV();
  out.sigma = svd.singularValues();
  const double cutoff = out.sigma.size() > 0 ? kRankTolerance * out.sigma[0] : 0.0;
  while (out.rank < out.sigma.size() && out.sigma[out.rank] > cutoff &&
         out.sigma[out.rank] > 0.0) {
    ++out.rank;
  }
  return out;
}

Matrix pseudo_inverse(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return Matrix::Zero(a.cols(), a.rows());
  const ThinSvd svd = decompose(a);
  Matrix out = Matrix::Zero(a.cols(), a.rows());
  for (int i = 0; i < svd.rank; ++i) {
    out += (1.0 / svd.sigma[i]) * svd.v.col(i) * svd.u.col(i).transpose();
  }
  return out;
}

void validate_operator(const Matrix& l, const char* what) {
  require(l.rows() >= 1 && l.cols() >= 1, errc::invalid_input,
          std::string(what) + ": operator matrix must be nonempty");
  require(l.allFinite(), errc::invalid_input,
          std::string(what) + ": operator matrix must be finite");
}

// The least-norm selection z -> x of a decomposition z = x + y with
// x in M, y in N, as a d x d matrix.  Solving Q_N U a = Q_N z for the
// minimal-norm coordinate vector a gives x = U a.
Matrix component_selector(const Subspace& m, const Subspace& n) {
  const int d = m.ambient_dim();
  if (m.is_zero()) return Matrix::Zero(d, d);
  Matrix q_n = Matrix::Identity(d, d);
  if (!n.is_zero()) q_n -= n.basis() * n.basis().transpose();
  const Matrix a = q_n * m.basis();
  return m.basis() * pseudo_inverse(a) * q_n;
}

void validate_pair(const Subspace& m, const Subspace& n) {
  require(m.ambient_dim() == n.ambient_dim(), errc::invalid_input,
          "subspaces live in different ambient spaces");
}

}  // namespace

Vector min_norm_preimage(const Matrix& l, const Eigen::Ref<const Vector>& y,
                         double tol) {
  validate_operator(l, "min_norm_preimage");
  require(y.size() == l.rows(), errc::invalid_input,
          "right-hand side dimension does not match the operator");
  require(y.allFinite(), errc::invalid_input, "right-hand side must be finite");
  require(std::isfinite(tol) && tol >= 0.0, errc::invalid_input,
          "tolerance must be finite and nonnegative");
  const ThinSvd svd = decompose(l);
  Vector x = Vector::Zero(l.cols());
  for (int i = 0; i < svd.rank; ++i) {
    x += (svd.u.col(i).dot(y) / svd.sigma[i]) * svd.v.col(i);
  }
  const double residual = (l * x - y).norm();
  require(residual <= tol * y.norm(), errc::not_in_range,
          "right-hand side is not in the operator range");
  return x;
}

ConstantReport range_constant(const Matrix& l) {
  validate_operator(l, "range_constant");
  const ThinSvd svd = decompose(l);
  require(svd.rank >= 1, errc::degenerate_input,
          "zero operator: the range is trivial and the constant undefined");
  const int r = svd.rank - 1;
  ConstantReport report;
  report.constant_c = 1.0 / svd.sigma[r];
  report.d = report.constant_c + 1.0;
  report.witness.z = svd.u.col(r);
  report.witness.x = svd.v.col(r) / svd.sigma[r];
  report.method = "closed_form";
  return report;
}

double quotient_norm(const Matrix& l, const Eigen::Ref<const Vector>& x) {
  validate_operator(l, "quotient_norm");
  require(x.size() == l.cols(), errc::invalid_input,
          "vector dimension does not match the operator domain");
  require(x.allFinite(), errc::invalid_input, "vector must be finite");
  const ThinSvd svd = decompose(l);
  // distance to the kernel = norm of the projection onto the row space
  double acc = 0.0;
  for (int i = 0; i < svd.rank; ++i) {
    const double coef = svd.v.col(i).dot(x);
    acc += coef * coef;
  }
  return std::sqrt(acc);
}

double graph_norm(const GraphOperator& t, const Eigen::Ref<const Vector>& x) {
  const Vector image = t.apply(x);
  return x.norm() + image.norm();
}

ConstantReport graph_range_constant(const GraphOperator& t) {
  require(!t.domain().is_zero(), errc::degenerate_input,
          "operator domain is the zero subspace");
  const ThinSvd svd = decompose(t.action());
  require(svd.rank >= 1, errc::degenerate_input,
          "zero operator: the range is trivial and the constant undefined");
  const int r = svd.rank - 1;
  ConstantReport report;
  report.constant_c = 1.0 / svd.sigma[r];
  report.d = report.constant_c + 1.0;
  report.witness.z = svd.u.col(r);
  report.witness.x = t.domain().basis() * (svd.v.col(r) / svd.sigma[r]);
  report.method = "closed_form";
  return report;
}

Vector sum_min_norm_component(const Subspace& m, const Subspace& n,
                              const Eigen::Ref<const Vector>& z) {
  validate_pair(m, n);
  require(z.size() == m.ambient_dim(), errc::invalid_input,
          "vector dimension does not match the ambient space");
  require(z.allFinite(), errc::invalid_input, "vector must be finite");
  const Subspace joint = sum(m, n);
  require(!joint.is_zero(), errc::degenerate_input,
          "M + N is the zero subspace");
  require(joint.contains(z, 1e-8), errc::not_in_range,
          "vector is not in M + N");
  return component_selector(m, n) * z;
}

ConstantReport sum_constant(const Subspace& m, const Subspace& n) {
  validate_pair(m, n);
  const Subspace joint = sum(m, n);
  require(!joint.is_zero(), errc::degenerate_input,
          "M + N is the zero subspace");
  require(!m.is_zero(), errc::degenerate_input,
          "M is the zero subspace; the constant degenerates to 0");

  const Matrix selector = component_selector(m, n);
  const Matrix on_joint = selector * joint.basis();
  const ThinSvd svd = decompose(on_joint);

  ConstantReport report;
  report.method = "closed_form";
  if (svd.rank == 0) {
    // M inside N: x = 0 decomposes every z
    report.constant_c = 0.0;
    report.d = 1.0;
    report.witness.z = joint.basis().col(0);
    report.witness.x = Vector::Zero(m.ambient_dim());
    report.witness.y = report.witness.z;
    return report;
  }
  report.constant_c = svd.sigma[0];
  report.d = report.constant_c + 1.0;
  report.witness.z = joint.basis() * svd.v.col(0);
  report.witness.x = selector * report.witness.z;
  report.witness.y = report.witness.z - report.witness.x;

  const double drift = n.is_zero() ? report.witness.y.norm()
                                   : n.distance(report.witness.y);
  require(drift <= 1e-8 * std::max(1.0, report.witness.z.norm()),
          errc::numerical, "witness decomposition failed verification");
  return report;
}

ConstantReport sum_constant_sampled(const Subspace& m, const Subspace& n,
                                    std::uint64_t seed, int samples) {
  validate_pair(m, n);
  require(samples >= 1, errc::invalid_input, "samples must be >= 1");
  const Subspace joint = sum(m, n);
  require(!joint.is_zero(), errc::degenerate_input,
          "M + N is the zero subspace");
  require(!m.is_zero(), errc::degenerate_input,
          "M is the zero subspace; the constant degenerates to 0");

  const Matrix selector = component_selector(m, n);
  const int s = joint.dim();
  Rng rng(seed);

  const auto ratio_at = [&](const Vector& w) {
    const Vector z = joint.basis() * w;
    return (selector * z).norm();
  };

  Vector best_w = Vector::Zero(s);
  best_w[0] = 1.0;
  double best = ratio_at(best_w);
  for (int i = 0; i < samples; ++i) {
    Vector w(s);
    for (int j = 0; j < s; ++j) w[j] = rng.normal();
    const double len = w.norm();
    if (len == 0.0) continue;
    w /= len;
    const double value = ratio_at(w);
    if (value > best) {
      best = value;
      best_w = w;
    }
  }

  // compass search on the unit sphere around the best sample
  double h = 0.25;
  while (h > 1e-9) {
    bool improved = false;
    for (int j = 0; j < s; ++j) {
      for (const double sign : {1.0, -1.0}) {
        Vector w = best_w;
        w[j] += sign * h;
        w /= w.norm();
        const double value = ratio_at(w);
        if (value > best + 1e-15) {
          best = value;
          best_w = w;
          improved = true;
        }
      }
    }
    if (!improved) h *= 0.5;
  }

  ConstantReport report;
  report.method = "sampled";
  report.constant_c = best;
  report.d = best + 1.0;
  report.witness.z = joint.basis() * best_w;
  report.witness.x = selector * report.witness.z;
  report.witness.y = report.witness.z - report.witness.x;
  return report;
}

}  // namespace apergo
