#include <apergo/subspace.hpp>
#include <doctest.h>

#include "helpers.hpp"

using apergo::GraphOperator;
using apergo::Matrix;
using apergo::Subspace;
using apergo::Vector;

TEST_CASE("from_spanning produces an orthonormal basis of the right rank") {
  apergo::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int ambient = rng.uniform_int(2, 8);
    const int rank = rng.uniform_int(1, ambient);
    // duplicate columns to force rank deficiency in the spanning set
    Matrix spanning(ambient, rank + 2);
    spanning.leftCols(rank) = test::random_matrix(rng, ambient, rank);
    spanning.col(rank) = 2.0 * spanning.col(0);
    spanning.col(rank + 1) = spanning.col(0) - spanning.col(rank - 1);
    const Subspace s = Subspace::from_spanning(spanning);
    CHECK(s.dim() == rank);
    const Matrix gram = s.basis().transpose() * s.basis();
    CHECK((gram - Matrix::Identity(rank, rank)).norm() <= 1e-10);
  }
}

TEST_CASE("projection, distance, and membership agree") {
  apergo::Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int ambient = rng.uniform_int(2, 7);
    const int dim = rng.uniform_int(1, ambient - 1);
    const Subspace s = test::random_subspace(rng, ambient, dim);

    const Vector inside = s.basis() * test::random_vector(rng, dim);
    CHECK(s.contains(inside));
    CHECK(s.distance(inside) <= 1e-10 * std::max(1.0, inside.norm()));
    CHECK((s.project(inside) - inside).norm() <=
          1e-10 * std::max(1.0, inside.norm()));
    CHECK((s.basis() * s.coordinates(inside) - inside).norm() <=
          1e-10 * std::max(1.0, inside.norm()));

    const Vector v = test::random_vector(rng, ambient);
    const Vector p = s.project(v);
    // projection residual is orthogonal to the subspace
    CHECK((s.basis().transpose() * (v - p)).norm() <= 1e-10);
    CHECK(s.distance(v) == doctest::Approx((v - p).norm()).epsilon(1e-10));
  }
}

TEST_CASE("zero and full subspaces behave at the edges") {
  const Subspace z = Subspace::zero(3);
  CHECK(z.is_zero());
  CHECK(z.dim() == 0);
  Vector v(3);
  v << 1.0, 2.0, 3.0;
  CHECK(z.project(v).norm() == 0.0);
  CHECK(z.distance(v) == doctest::Approx(v.norm()));
  CHECK(!z.contains(v));
  CHECK(z.contains(Vector::Zero(3)));

  const Subspace full = Subspace::full(3);
  CHECK(full.dim() == 3);
  CHECK(full.contains(v));
}

TEST_CASE("from_orthonormal rejects skewed bases") {
  Matrix skew(3, 2);
  skew << 1.0, 1.0, 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(Subspace::from_orthonormal(skew), apergo::Error);
  Matrix ok(3, 2);
  ok << 1.0, 0.0, 0.0, 1.0, 0.0, 0.0;
  CHECK(Subspace::from_orthonormal(ok).dim() == 2);
}

TEST_CASE("sum spans both parts") {
  apergo::Rng rng(47);
  const Subspace m = test::random_subspace(rng, 5, 2);
  const Subspace n = test::random_subspace(rng, 5, 2);
  const Subspace s = apergo::sum(m, n);
  CHECK(s.dim() >= 2);
  CHECK(s.dim() <= 4);
  const Vector vm = m.basis() * test::random_vector(rng, 2);
  const Vector vn = n.basis() * test::random_vector(rng, 2);
  CHECK(s.contains(vm));
  CHECK(s.contains(vn));
  CHECK(s.contains(vm + vn));
}

TEST_CASE("graph operators only apply on their domain") {
  Matrix basis(3, 1);
  basis << 1.0, 0.0, 0.0;
  Matrix action(2, 1);
  action << 3.0, 4.0;
  const GraphOperator t(Subspace::from_orthonormal(basis), action);

  Vector x(3);
  x << 2.0, 0.0, 0.0;
  const Vector y = t.apply(x);
  CHECK(y[0] == doctest::Approx(6.0));
  CHECK(y[1] == doctest::Approx(8.0));

  Vector off(3);
  off << 0.0, 1.0, 0.0;
  try {
    static_cast<void>(t.apply(off));
    CHECK(false);
  } catch (const apergo::Error& e) {
    CHECK(e.code() == apergo::errc::domain_error);
  }

  Vector wrong_dim(2);
  wrong_dim << 1.0, 0.0;
  CHECK_THROWS_AS(static_cast<void>(t.apply(wrong_dim)), apergo::Error);

  // action column count must match the domain dimension
  CHECK_THROWS_AS(
      GraphOperator(Subspace::from_orthonormal(basis), Matrix::Ones(2, 2)),
      apergo::Error);
}
