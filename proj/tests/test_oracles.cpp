#include <apergo/oracles.hpp>
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "helpers.hpp"

using apergo::Matrix;
using apergo::Vector;

TEST_CASE("orthonormalize spans the input and drops dependent columns") {
  apergo::Rng rng(311);
  for (int trial = 0; trial < 50; ++trial) {
    const int ambient = rng.uniform_int(2, 8);
    const int rank = rng.uniform_int(1, ambient);
    Matrix cols(ambient, rank + 1);
    cols.leftCols(rank) = test::random_matrix(rng, ambient, rank);
    cols.col(rank) = cols.leftCols(rank) * test::random_vector(rng, rank);
    const Matrix q = apergo::oracle::orthonormalize(cols);
    REQUIRE(q.cols() == rank);
    CHECK((q.transpose() * q - Matrix::Identity(rank, rank)).norm() <= 1e-10);
    // every input column is reproduced by its projection on q
    for (int j = 0; j < cols.cols(); ++j) {
      const Vector c = cols.col(j);
      CHECK((q * (q.transpose() * c) - c).norm() <=
            1e-8 * std::max(1.0, c.norm()));
    }
  }
}

TEST_CASE("elimination_solve recovers a planted solution") {
  apergo::Rng rng(313);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = rng.uniform_int(1, 8);
    const int cols = rng.uniform_int(1, 12);
    const Matrix a = test::random_matrix(rng, rows, cols);
    const Vector planted = test::random_vector(rng, cols);
    const Vector b = a * planted;
    const auto solve = apergo::oracle::elimination_solve(a, b);
    REQUIRE(solve.consistent);
    CHECK((a * solve.solution - b).norm() <= 1e-8 * std::max(1.0, b.norm()));
  }
}

TEST_CASE("elimination_solve flags inconsistent systems") {
  Matrix a(2, 1);
  a << 1.0, 1.0;
  Vector b(2);
  b << 1.0, 2.0;
  const auto solve = apergo::oracle::elimination_solve(a, b);
  CHECK(!solve.consistent);
  CHECK(solve.residual > 0.1);
}

TEST_CASE("elimination_nullspace matches the rank-nullity count") {
  apergo::Rng rng(317);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = rng.uniform_int(1, 6);
    const int cols = rng.uniform_int(1, 9);
    const int rank = rng.uniform_int(0, std::min(rows, cols));
    Matrix a = Matrix::Zero(rows, cols);
    if (rank > 0) a = test::random_rank_matrix(rng, rows, cols, rank);
    const Matrix nullsp = apergo::oracle::elimination_nullspace(a);
    CHECK(nullsp.cols() == cols - rank);
    if (nullsp.cols() > 0) {
      CHECK((a * nullsp).norm() <= 1e-8 * std::max(1.0, a.norm()));
      const Matrix gram = nullsp.transpose() * nullsp;
      // columns are independent (oracle returns a basis, not a spanning set)
      Eigen::FullPivLU<Matrix> lu(gram);
      CHECK(lu.rank() == nullsp.cols());
    }
  }
}

TEST_CASE("min_over_affine agrees with the orthogonal projection formula") {
  apergo::Rng rng(331);
  for (int trial = 0; trial < 30; ++trial) {
    const int ambient = rng.uniform_int(2, 6);
    const int free_dims = rng.uniform_int(1, ambient - 1);
    const Vector x0 = test::random_vector(rng, ambient);
    const Matrix k = test::random_matrix(rng, ambient, free_dims);
    const Vector best =
        apergo::oracle::min_over_affine(x0, k, 900 + trial, 128, 12);
    // Euclidean minimum over x0 + span(k) is x0 minus its projection on k
    const Matrix q = apergo::oracle::orthonormalize(k);
    const Vector exact = x0 - q * (q.transpose() * x0);
    CHECK(best.norm() <= exact.norm() + 1e-6 * std::max(1.0, exact.norm()));
    CHECK(best.norm() >= exact.norm() - 1e-12);
  }
}

TEST_CASE("gram_lambda_max reproduces known spectra") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  d(2, 2) = 1.0;
  CHECK(apergo::oracle::gram_lambda_max(d) == doctest::Approx(9.0));

  Matrix two(2, 2);
  two << 2.0, 1.0, 1.0, 2.0;
  CHECK(apergo::oracle::gram_lambda_max(two) == doctest::Approx(3.0));

  CHECK(apergo::oracle::gram_lambda_max(Matrix::Zero(4, 4)) == 0.0);

  apergo::Rng rng(337);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform_int(1, 8);
    const Matrix b = test::random_matrix(rng, n, n);
    const Matrix gram = b.transpose() * b;
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
    const double reference = es.eigenvalues().maxCoeff();
    const double got = apergo::oracle::gram_lambda_max(gram);
    CHECK(std::abs(got - reference) <= 1e-10 * std::max(1.0, reference));
  }
}

TEST_CASE("gram_lambda_max handles tight eigenvalue clusters") {
  apergo::Rng rng(347);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4;
    const Matrix q = apergo::oracle::orthonormalize(
        test::random_matrix(rng, n, n) + 3.0 * Matrix::Identity(n, n));
    REQUIRE(q.cols() == n);
    Vector evals(n);
    const double gap = std::pow(10.0, -rng.uniform(4.0, 12.0));
    evals << 1.0, 1.0 - gap, 0.5, 0.1;
    const Matrix gram = q * evals.asDiagonal() * q.transpose();
    const double got =
        apergo::oracle::gram_lambda_max((gram + gram.transpose()) / 2.0);
    CHECK(std::abs(got - 1.0) <= 1e-10);
  }
}
