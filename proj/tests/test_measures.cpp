#include <apergo/measures.hpp>
#include <doctest.h>

using apergo::MeasureDensity;
using apergo::MeasureSide;
using apergo::Vector;
using apergo::WeightSeq;

TEST_CASE("weight sequences validate their window") {
  Vector w(5);
  w << 1.0, 0.0, 2.0, 0.0, 1.0;
  const WeightSeq p(w);
  CHECK(p.n_max() == 2);
  CHECK(p.at(-2) == 1.0);
  CHECK(p.at(0) == 2.0);
  CHECK(p.window_sum(1) == doctest::Approx(2.0));
  CHECK(p.window_sum(2) == doctest::Approx(4.0));
  CHECK_THROWS_AS(static_cast<void>(p.at(3)), apergo::Error);

  Vector even(4);
  even << 1.0, 1.0, 1.0, 1.0;
  CHECK_THROWS_AS(WeightSeq{even}, apergo::Error);
  Vector negative(3);
  negative << 1.0, -1.0, 1.0;
  CHECK_THROWS_AS(WeightSeq{negative}, apergo::Error);
}

TEST_CASE("uniform and alternating weight patterns") {
  const WeightSeq u = WeightSeq::uniform(3);
  CHECK(u.window_sum(3) == doctest::Approx(7.0));
  CHECK(u.at(2) == 1.0);

  const WeightSeq alt = WeightSeq::alternating(4);
  CHECK(alt.at(0) == 0.0);
  CHECK(alt.at(1) == 1.0);
  CHECK(alt.at(-1) == 1.0);
  CHECK(alt.at(2) == 0.0);
  CHECK(alt.at(3) == 1.0);

  const WeightSeq alt2 = WeightSeq::alternating(4, false);
  CHECK(alt2.at(0) == 1.0);
  CHECK(alt2.at(1) == 0.0);
}

TEST_CASE("constant densities and their trivial cases") {
  const MeasureDensity leb = MeasureDensity::lebesgue();
  CHECK(leb.is_constant());
  CHECK(leb.constant_value() == 1.0);
  CHECK(leb.has_density());
  CHECK(leb.density_at(17.3) == 1.0);

  const MeasureDensity atoms = MeasureDensity::atoms_only();
  CHECK(!atoms.has_density());
  CHECK(atoms.density_at(0.0) == 0.0);
}

TEST_CASE("sampled densities interpolate and vanish outside their grid") {
  const MeasureDensity mu =
      MeasureDensity::sampled({0.0, 1.0, 2.0}, {0.0, 2.0, 0.0});
  CHECK(mu.density_at(0.5) == doctest::Approx(1.0));
  CHECK(mu.density_at(1.5) == doctest::Approx(1.0));
  CHECK(mu.density_at(1.0) == doctest::Approx(2.0));
  CHECK(mu.density_at(-0.5) == 0.0);
  CHECK(mu.density_at(2.5) == 0.0);

  CHECK_THROWS_AS(MeasureDensity::sampled({0.0, 0.0}, {1.0, 1.0}),
                  apergo::Error);
  CHECK_THROWS_AS(MeasureDensity::sampled({0.0, 1.0}, {1.0, -1.0}),
                  apergo::Error);
  CHECK_THROWS_AS(MeasureDensity::sampled({0.0}, {1.0, 1.0}), apergo::Error);
}

TEST_CASE("atoms validate mass and position") {
  MeasureDensity mu = MeasureDensity::atoms_only();
  mu.add_atom(1.0, 2.0).add_atom(-1.0, 0.5);
  CHECK(mu.atoms().size() == 2);
  CHECK_THROWS_AS(mu.add_atom(0.0, -1.0), apergo::Error);

  MeasureDensity half = MeasureDensity::atoms_only(MeasureSide::HalfLine);
  CHECK_THROWS_AS(half.add_atom(-1.0, 1.0), apergo::Error);
  half.add_atom(1.0, 1.0);
  CHECK(half.atoms().size() == 1);
}

TEST_CASE("unit atoms on integers mirror discrete windows") {
  const MeasureDensity mu = MeasureDensity::unit_atoms_on_integers(2);
  CHECK(mu.atoms().size() == 5);
  CHECK(!mu.has_density());
  const MeasureDensity half =
      MeasureDensity::unit_atoms_on_integers(2, MeasureSide::HalfLine);
  CHECK(half.atoms().size() == 3);
}
