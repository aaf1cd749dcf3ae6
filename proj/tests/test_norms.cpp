#include <apergo/norms.hpp>
#include <doctest.h>

#include "helpers.hpp"

using apergo::NormKind;
using apergo::Vector;

TEST_CASE("norm evaluates the three families") {
  Vector v(2);
  v << 3.0, 4.0;
  CHECK(apergo::norm(v, NormKind::euclidean()) == doctest::Approx(5.0));
  CHECK(apergo::norm(v, NormKind::p_norm(1.0)) == doctest::Approx(7.0));
  CHECK(apergo::norm(v, NormKind::sup()) == doctest::Approx(4.0));
  CHECK(apergo::norm(v, NormKind::p_norm(3.0)) ==
        doctest::Approx(std::pow(27.0 + 64.0, 1.0 / 3.0)));
}

TEST_CASE("norm kind parsing and naming round-trip") {
  CHECK(NormKind::parse("euclidean") == NormKind::euclidean());
  CHECK(NormKind::parse("sup") == NormKind::sup());
  CHECK(NormKind::parse("inf") == NormKind::sup());
  CHECK(NormKind::parse("p1.5") == NormKind::p_norm(1.5));
  CHECK(NormKind::parse("p2") == NormKind::euclidean());
  CHECK(NormKind::parse(NormKind::sup().name()) == NormKind::sup());
  CHECK_THROWS_AS(NormKind::parse("p0.5"), apergo::Error);
  CHECK_THROWS_AS(NormKind::parse("banana"), apergo::Error);
}

TEST_CASE("vector validation rejects empty and non-finite input") {
  Vector empty(0);
  CHECK_THROWS_AS(apergo::validate_vector(empty), apergo::Error);
  Vector bad(2);
  bad << 1.0, std::nan("");
  CHECK_THROWS_AS(apergo::norm(bad, NormKind::euclidean()), apergo::Error);
}

TEST_CASE("radial retraction keeps the ball fixed and projects outside") {
  Vector x(2);
  x << 3.0, 4.0;
  const Vector r = apergo::radial_retraction(x, 1.0, NormKind::euclidean());
  CHECK(r[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.8).epsilon(1e-12));

  const Vector inside = apergo::radial_retraction(x, 10.0, NormKind::euclidean());
  CHECK(inside == x);

  const Vector origin = apergo::radial_retraction(Vector::Zero(3), 0.0,
                                                  NormKind::sup());
  CHECK(origin.norm() == 0.0);

  CHECK_THROWS_AS(apergo::radial_retraction(x, -1.0, NormKind::euclidean()),
                  apergo::Error);
}

TEST_CASE("radial retraction norm equals min(norm, radius)") {
  apergo::Rng rng(101);
  for (int trial = 0; trial < 2000; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const NormKind kind = test::norm_kind_for(trial);
    const Vector x = test::random_vector(rng, dim, 2.0);
    const double radius = rng.uniform(0.0, 3.0);
    const Vector px = apergo::radial_retraction(x, radius, kind);
    const double want = std::min(apergo::norm(x, kind), radius);
    CHECK(std::abs(apergo::norm(px, kind) - want) <= 1e-12 * (1.0 + want));
  }
}

TEST_CASE("radial retraction is 2-lipschitz across norms and radii") {
  apergo::Rng rng(7);
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const NormKind kind = test::norm_kind_for(trial);
    const Vector x1 = test::random_vector(rng, dim, 3.0);
    const Vector x2 = test::random_vector(rng, dim, 3.0);
    const double radius = rng.uniform(0.0, 10.0);
    const Vector p1 = apergo::radial_retraction(x1, radius, kind);
    const Vector p2 = apergo::radial_retraction(x2, radius, kind);
    CHECK(apergo::norm(p1 - p2, kind) <=
          2.0 * apergo::norm(x1 - x2, kind) + 1e-12);
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("dunkl-williams slack matches the two pinned cases") {
  Vector e1(2), e2(2), twice(2);
  e1 << 1.0, 0.0;
  e2 << 0.0, 1.0;
  twice << 2.0, 0.0;
  // orthogonal unit pair: 4*sqrt(2)/2 - sqrt(2) = sqrt(2)
  CHECK(apergo::dunkl_williams_slack(e1, e2, NormKind::euclidean()) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // parallel pair of norms 1 and 2: 4/3 - 0
  CHECK(apergo::dunkl_williams_slack(e1, twice, NormKind::euclidean()) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("dunkl-williams slack is nonnegative for random pairs") {
  apergo::Rng rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const int dim = rng.uniform_int(1, 8);
    const Vector x1 = test::random_nonzero(rng, dim, 2.0);
    const Vector x2 = test::random_nonzero(rng, dim, 2.0);
    CHECK(apergo::dunkl_williams_slack(x1, x2, NormKind::euclidean()) >=
          -1e-12);
  }
}

TEST_CASE("dunkl-williams requires nonzero inputs") {
  Vector z = Vector::Zero(2);
  Vector e1(2);
  e1 << 1.0, 0.0;
  CHECK_THROWS_AS(apergo::dunkl_williams_slack(z, e1, NormKind::euclidean()),
                  apergo::Error);
}

TEST_CASE("column_diff_norm matches the materialized difference") {
  apergo::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform_int(1, 6);
    const apergo::Matrix a = test::random_matrix(rng, dim, 5);
    const apergo::Matrix b = test::random_matrix(rng, dim, 7);
    const NormKind kind = test::norm_kind_for(trial);
    const int ca = rng.uniform_int(0, 4);
    const int cb = rng.uniform_int(0, 6);
    const Vector diff = a.col(ca) - b.col(cb);
    CHECK(apergo::column_diff_norm(a, ca, b, cb, kind) ==
          doctest::Approx(apergo::norm(diff, kind)).epsilon(1e-14));
  }
}
