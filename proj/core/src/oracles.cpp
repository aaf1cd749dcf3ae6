#include "apergo/oracles.hpp"

#include <cmath>
#include <vector>

#include "apergo/errors.hpp"
#include "apergo/rng.hpp"

namespace apergo::oracle {

namespace {

struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;
};

Echelon reduce(const Matrix& a) {
  Echelon out;
  out.rref = a;
  Matrix& m = out.rref;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double tol = 1e-12 * scale;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = row;
    for (int r = row + 1; r < m.rows(); ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (std::abs(m(pivot, col)) <= tol) continue;
    m.row(pivot).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (int r = 0; r < m.rows(); ++r) {
      if (r != row && m(r, col) != 0.0) m.row(r) -= m(r, col) * m.row(row);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

double affine_norm2(const Vector& x0, const Matrix& k, const Vector& c) {
  return (x0 + k * c).squaredNorm();
}

}  // namespace

Matrix orthonormalize(const Matrix& cols, double rel_tol) {
  require(cols.rows() >= 1, errc::invalid_input,
          "orthonormalize needs a positive ambient dimension");
  double scale = 0.0;
  for (int j = 0; j < cols.cols(); ++j) {
    scale = std::max(scale, cols.col(j).norm());
  }
  Matrix q(cols.rows(), cols.cols());
  int kept = 0;
  for (int j = 0; j < cols.cols(); ++j) {
    Vector v = cols.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < kept; ++i) {
        v -= q.col(i).dot(v) * q.col(i);
      }
    }
    const double len = v.norm();
    if (len > rel_tol * scale && len > 0.0) {
      q.col(kept++) = v / len;
    }
  }
  return q.leftCols(kept);
}

Matrix elimination_nullspace(const Matrix& a) {
  require(a.rows() >= 1 && a.cols() >= 1, errc::invalid_input,
          "elimination_nullspace needs a nonempty matrix");
  const Echelon e = reduce(a);
  std::vector<int> free_cols;
  for (int col = 0, p = 0; col < a.cols(); ++col) {
    if (p < static_cast<int>(e.pivot_cols.size()) && e.pivot_cols[p] == col) {
      ++p;
    } else {
      free_cols.push_back(col);
    }
  }
  Matrix basis = Matrix::Zero(a.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis(free_cols[j], static_cast<int>(j)) = 1.0;
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
      basis(e.pivot_cols[p], static_cast<int>(j)) =
          -e.rref(static_cast<int>(p), free_cols[j]);
    }
  }
  return basis;
}

LinearSolve elimination_solve(const Matrix& a, const Vector& b) {
  require(a.rows() == b.size(), errc::invalid_input,
          "elimination_solve dimension mismatch");
  Matrix augmented(a.rows(), a.cols() + 1);
  augmented.leftCols(a.cols()) = a;
  augmented.col(a.cols()) = b;
  const Echelon e = reduce(augmented);

  LinearSolve out;
  out.solution = Vector::Zero(a.cols());
  out.consistent = true;
  for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
    if (e.pivot_cols[p] == a.cols()) {
      out.consistent = false;  // pivot in the augmented column
    }
  }
  if (out.consistent) {
    for (std::size_t p = 0; p < e.pivot_cols.size(); ++p) {
      out.solution[e.pivot_cols[p]] = e.rref(static_cast<int>(p), a.cols());
    }
  }
  out.residual = (a * out.solution - b).norm();
  const double scale = std::max(1.0, b.norm());
  if (out.residual > 1e-8 * scale) out.consistent = false;
  return out;
}

Vector min_over_affine(const Vector& x0, const Matrix& kernel_cols,
                       std::uint64_t seed, int samples, int cycles) {
  if (kernel_cols.cols() == 0) return x0;
  const Matrix k = orthonormalize(kernel_cols);
  const int s = static_cast<int>(k.cols());
  if (s == 0) return x0;

  Rng rng(seed);
  const double spread = std::max(1.0, x0.norm());
  Vector best_c = Vector::Zero(s);
  double best = affine_norm2(x0, k, best_c);
  for (int i = 0; i < samples; ++i) {
    Vector c(s);
    for (int j = 0; j < s; ++j) c[j] = spread * rng.normal();
    const double value = affine_norm2(x0, k, c);
    if (value < best) {
      best = value;
      best_c = c;
    }
  }

  const double h = 1.0;
  for (int cycle = 0; cycle < cycles; ++cycle) {
    const double before = best;
    for (int j = 0; j < s; ++j) {
      Vector c_plus = best_c;
      Vector c_minus = best_c;
      c_plus[j] += h;
      c_minus[j] -= h;
      const double f0 = best;
      const double fp = affine_norm2(x0, k, c_plus);
      const double fm = affine_norm2(x0, k, c_minus);
      const double curvature = fp - 2.0 * f0 + fm;
      if (curvature <= 0.0) continue;
      Vector c_next = best_c;
      c_next[j] -= h * (fp - fm) / (2.0 * curvature);
      const double value = affine_norm2(x0, k, c_next);
      if (value < best) {
        best = value;
        best_c = c_next;
      }
    }
    if (before - best <= 1e-16 * (1.0 + best)) break;
  }
  return x0 + k * best_c;
}

double gram_lambda_max(const Matrix& gram) {
  require(gram.rows() == gram.cols() && gram.rows() >= 1, errc::invalid_input,
          "gram_lambda_max needs a square matrix");
  const double frob = gram.norm();
  if (frob == 0.0) return 0.0;

  // Cyclic Jacobi sweeps: rotate away the largest off-diagonal entries until
  // the matrix is numerically diagonal.  Quadratic convergence makes a few
  // dozen sweeps enough for machine precision at these sizes.
  Matrix a = gram;
  const int n = static_cast<int>(a.rows());
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= 1e-15 * frob) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-18 * frob) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  double lambda = a(0, 0);
  for (int i = 1; i < n; ++i) lambda = std::max(lambda, a(i, i));
  return lambda;
}

Vector min_norm_preimage_search(const Matrix& l, const Vector& y,
                                std::uint64_t seed) {
  const LinearSolve base = elimination_solve(l, y);
  require(base.consistent, errc::not_in_range,
          "right-hand side is not in the operator range");
  return min_over_affine(base.solution, elimination_nullspace(l), seed);
}

double quotient_norm_search(const Matrix& l, const Vector& x,
                            std::uint64_t seed) {
  require(x.size() == l.cols(), errc::invalid_input,
          "vector dimension does not match the operator domain");
  return min_over_affine(x, elimination_nullspace(l), seed).norm();
}

double range_constant_search(const Matrix& l, std::uint64_t seed) {
  require(l.rows() >= 1 && l.cols() >= 1 && l.allFinite(), errc::invalid_input,
          "range_constant_search needs a finite nonempty matrix");
  double scale = 0.0;
  for (int j = 0; j < l.cols(); ++j) scale = std::max(scale, l.col(j).norm());
  require(scale > 0.0, errc::degenerate_input, "zero operator");

  // Gram-Schmidt over the image columns, carrying a preimage through the
  // same row operations so each orthonormal range direction arrives with
  // some x solving L x = q.
  Matrix q(l.rows(), l.cols());
  Matrix pre(l.cols(), l.cols());
  int kept = 0;
  for (int j = 0; j < l.cols(); ++j) {
    Vector v = l.col(j);
    Vector p = Vector::Zero(l.cols());
    p[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < kept; ++i) {
        const double r = q.col(i).dot(v);
        v -= r * q.col(i);
        p -= r * pre.col(i);
      }
    }
    const double len = v.norm();
    if (len > 1e-10 * scale) {
      q.col(kept) = v / len;
      pre.col(kept) = p / len;
      ++kept;
    }
  }
  require(kept >= 1, errc::degenerate_input, "zero operator");

  const Matrix kernel = elimination_nullspace(l);
  Matrix min_pre(l.cols(), kept);
  for (int i = 0; i < kept; ++i) {
    min_pre.col(i) = min_over_affine(pre.col(i), kernel, seed + i);
    require((l * min_pre.col(i) - q.col(i)).norm() <= 1e-8, errc::numerical,
            "carried preimage drifted away from its range direction");
  }
  const Matrix gram = min_pre.transpose() * min_pre;
  return std::sqrt(gram_lambda_max(gram));
}

Vector sum_component_search(const Matrix& m_span, const Matrix& n_span,
                            const Vector& z, std::uint64_t seed) {
  require(m_span.rows() == n_span.rows() && m_span.rows() == z.size(),
          errc::invalid_input, "ambient dimensions disagree");
  Matrix joint(m_span.rows(), m_span.cols() + n_span.cols());
  joint.leftCols(m_span.cols()) = m_span;
  joint.rightCols(n_span.cols()) = n_span;
  const LinearSolve base = elimination_solve(joint, z);
  require(base.consistent, errc::not_in_range, "vector is not in M + N");

  const Vector x0 = m_span * base.solution.head(m_span.cols());
  const Matrix nullspace = elimination_nullspace(joint);
  const Matrix x_directions = m_span * nullspace.topRows(m_span.cols());

  // minimizing over the x-image of the joint nullspace keeps x in M while
  // z - x stays in N
  return min_over_affine(x0, x_directions, seed);
}

double sum_constant_search(const Matrix& m_span, const Matrix& n_span,
                           std::uint64_t seed) {
  Matrix joint(m_span.rows(), m_span.cols() + n_span.cols());
  joint.leftCols(m_span.cols()) = m_span;
  joint.rightCols(n_span.cols()) = n_span;
  const Matrix s = orthonormalize(joint);
  require(s.cols() >= 1, errc::degenerate_input, "M + N is the zero subspace");

  Matrix components(m_span.rows(), s.cols());
  for (int i = 0; i < s.cols(); ++i) {
    components.col(i) = sum_component_search(m_span, n_span, s.col(i), seed + i);
  }
  const Matrix gram = components.transpose() * components;
  return std::sqrt(gram_lambda_max(gram));
}

double sum_constant_sweep_2d(const Matrix& m_span, const Matrix& n_span,
                             int grid) {
  require(grid >= 16, errc::invalid_input, "sweep grid too coarse");
  Matrix joint(m_span.rows(), m_span.cols() + n_span.cols());
  joint.leftCols(m_span.cols()) = m_span;
  joint.rightCols(n_span.cols()) = n_span;
  const Matrix s = orthonormalize(joint);
  require(s.cols() == 2, errc::invalid_input,
          "sum_constant_sweep_2d needs a two-dimensional M + N");

  const auto ratio = [&](double phi) {
    const Vector z = std::cos(phi) * s.col(0) + std::sin(phi) * s.col(1);
    return sum_component_search(m_span, n_span, z, 7).norm();
  };

  const double pi = 3.14159265358979323846;
  double best_phi = 0.0;
  double best = ratio(0.0);
  for (int i = 1; i < grid; ++i) {
    const double phi = pi * i / grid;
    const double value = ratio(phi);
    if (value > best) {
      best = value;
      best_phi = phi;
    }
  }

  // golden-section refinement around the best grid angle
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_phi - pi / grid;
  double hi = best_phi + pi / grid;
  double m1 = hi - gr * (hi - lo);
  double m2 = lo + gr * (hi - lo);
  double f1 = ratio(m1);
  double f2 = ratio(m2);
  for (int i = 0; i < 120; ++i) {
    if (f1 < f2) {
      lo = m1;
      m1 = m2;
      f1 = f2;
      m2 = lo + gr * (hi - lo);
      f2 = ratio(m2);
    } else {
      hi = m2;
      m2 = m1;
      f2 = f1;
      m1 = hi - gr * (hi - lo);
      f1 = ratio(m1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace apergo::oracle
