#include <apergo/generators.hpp>
#include <apergo/io.hpp>
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "helpers.hpp"

using apergo::Domain;
using apergo::Matrix;
using apergo::MeasureDensity;
using apergo::NormKind;
using apergo::ProcessEnsemble;
using apergo::SampledSignal;
using apergo::Vector;
using apergo::WeightSeq;

namespace {

// unique temp path per test body; removed on scope exit
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) {
    path = (std::filesystem::temp_directory_path() /
            ("apergo_test_" + name))
               .string();
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
    std::filesystem::remove(path + ".tmp", ec);
  }
};

}  // namespace

TEST_CASE("matrix CSV and JSON round-trip") {
  apergo::Rng rng(701);
  const Matrix m = test::random_matrix(rng, 3, 4);

  TempFile csv("m.csv");
  apergo::io::write_matrix_csv(csv.path, m);
  const Matrix back = apergo::io::read_matrix(csv.path);
  REQUIRE(back.rows() == 3);
  REQUIRE(back.cols() == 4);
  CHECK((back - m).norm() == 0.0);
  CHECK(!std::filesystem::exists(csv.path + ".tmp"));

  TempFile js("m.json");
  apergo::io::write_text_atomic(
      js.path,
      "{\"rows\": 2, \"cols\": 2, \"entries\": [1.0, 2.0, 3.0, 4.0]}\n");
  const Matrix mj = apergo::io::read_matrix(js.path);
  CHECK(mj(0, 0) == 1.0);
  CHECK(mj(0, 1) == 2.0);
  CHECK(mj(1, 0) == 3.0);
  CHECK(mj(1, 1) == 4.0);
}

TEST_CASE("matrix readers reject malformed input") {
  TempFile bad("bad_matrix.csv");
  apergo::io::write_text_atomic(bad.path, "dim,2,2\n1,2\n3\n");
  CHECK_THROWS_AS(static_cast<void>(apergo::io::read_matrix(bad.path)),
                  apergo::Error);

  TempFile badjs("bad_matrix.json");
  apergo::io::write_text_atomic(badjs.path,
                                "{\"rows\": 2, \"cols\": 2, \"entries\": [1]}");
  CHECK_THROWS_AS(static_cast<void>(apergo::io::read_matrix(badjs.path)),
                  apergo::Error);

  CHECK_THROWS_AS(
      static_cast<void>(apergo::io::read_matrix("/nonexistent/nope.csv")),
      apergo::Error);
}

TEST_CASE("subspace files span by rows") {
  TempFile f("span.csv");
  apergo::io::write_text_atomic(f.path, "dim,2,3\n1,0,0\n2,0,0\n");
  const auto s = apergo::io::read_subspace(f.path);
  CHECK(s.dim() == 1);
  Vector e1(3);
  e1 << 1.0, 0.0, 0.0;
  CHECK(s.contains(e1));
}

TEST_CASE("signals round-trip on all three grid shapes") {
  apergo::Rng rng(703);
  const NormKind kind = NormKind::euclidean();
  const std::vector<Domain> domains = {Domain::z_window(4),
                                       Domain::r_grid(1.0, 0.25),
                                       Domain::r_plus_grid(1.0, 0.5)};
  int idx = 0;
  for (const Domain& d : domains) {
    SampledSignal s = apergo::gen_random_trig_polynomial(d, 2, 2, 1.0, 3.0,
                                                         800 + idx, kind);
    TempFile f("sig_" + std::to_string(idx) + ".csv");
    apergo::io::write_signal(f.path, s);
    const SampledSignal back = apergo::io::read_signal(f.path, kind);
    CHECK(back.domain().kind() == d.kind());
    REQUIRE(back.domain().size() == d.size());
    CHECK(apergo::sup_distance(back, s) <= 1e-12);
    ++idx;
  }
}

TEST_CASE("signal reader honors a domain hint") {
  TempFile f("hinted.csv");
  apergo::io::write_text_atomic(f.path,
                                "t,x1\n0,1\n1,2\n2,3\n3,4\n4,5\n");
  // integer points starting at 0 could be a half-line grid; force it
  const SampledSignal s = apergo::io::read_signal(
      f.path, NormKind::euclidean(), apergo::DomainKind::RPlusGrid);
  CHECK(s.domain().kind() == apergo::DomainKind::RPlusGrid);
}

TEST_CASE("weights round-trip and reject broken windows") {
  const WeightSeq w = WeightSeq::alternating(5, true);
  TempFile f("weights.csv");
  apergo::io::write_weights(f.path, w);
  const WeightSeq back = apergo::io::read_weights(f.path);
  CHECK(back.n_max() == 5);
  for (int n = -5; n <= 5; ++n) {
    CHECK(back.at(n) == doctest::Approx(w.at(n)).epsilon(1e-15));
  }

  TempFile missing("weights_missing.csv");
  apergo::io::write_text_atomic(missing.path, "n,p\n-1,0.5\n1,0.5\n");
  CHECK_THROWS_AS(static_cast<void>(apergo::io::read_weights(missing.path)),
                  apergo::Error);

  TempFile dup("weights_dup.csv");
  apergo::io::write_text_atomic(dup.path,
                                "n,p\n-1,0.2\n0,0.2\n0,0.2\n1,0.4\n");
  CHECK_THROWS_AS(static_cast<void>(apergo::io::read_weights(dup.path)),
                  apergo::Error);
}

TEST_CASE("measures round-trip constants and atoms") {
  MeasureDensity mu =
      MeasureDensity::constant(0.5, apergo::MeasureSide::HalfLine);
  mu.add_atom(1.0, 0.25).add_atom(3.0, 0.75);
  TempFile f("measure.json");
  apergo::io::write_measure(f.path, mu);
  const MeasureDensity back = apergo::io::read_measure(f.path);
  CHECK(back.side() == apergo::MeasureSide::HalfLine);
  CHECK(back.density_at(2.0) == doctest::Approx(0.5));
  REQUIRE(back.atoms().size() == 2);
  CHECK(back.atoms()[0].first == 1.0);
  CHECK(back.atoms()[0].second == 0.25);
  CHECK(back.atoms()[1].first == 3.0);

  TempFile bad("measure_bad.json");
  apergo::io::write_text_atomic(bad.path, "{\"side\": \"diagonal\"}");
  CHECK_THROWS_AS(static_cast<void>(apergo::io::read_measure(bad.path)),
                  apergo::Error);
}

TEST_CASE("sampled densities read back by interpolation") {
  TempFile f("measure_sampled.json");
  apergo::io::write_text_atomic(
      f.path,
      "{\"side\": \"line\", \"density\": {\"type\": \"sampled\", "
      "\"times\": [0.0, 1.0, 2.0], \"values\": [1.0, 3.0, 5.0]}, "
      "\"atoms\": []}");
  const MeasureDensity mu = apergo::io::read_measure(f.path);
  CHECK(mu.density_at(0.5) == doctest::Approx(2.0));
  CHECK(mu.density_at(2.0) == doctest::Approx(5.0));
}

TEST_CASE("ensembles round-trip with draws intact") {
  const Domain d = Domain::r_grid(1.0, 0.5);
  const auto x = ProcessEnsemble::gaussian_scaled(
      d, [](double t) { return 1.0 + 0.1 * t * t; }, 3, 2, 31);
  TempFile f("ensemble.csv");
  apergo::io::write_ensemble(f.path, x);
  const ProcessEnsemble back = apergo::io::read_ensemble(f.path, x.seed());
  CHECK(back.draws() == 3);
  CHECK(back.dim() == 2);
  REQUIRE(back.domain().size() == d.size());
  CHECK((back.stacked() - x.stacked()).norm() <= 1e-12);

  TempFile missing("ensemble_missing.csv");
  apergo::io::write_text_atomic(missing.path,
                                "t,draw_id,x1\n0,0,1\n0,1,2\n1,0,3\n");
  CHECK_THROWS_AS(
      static_cast<void>(apergo::io::read_ensemble(missing.path, 0)),
      apergo::Error);

  TempFile one_draw("ensemble_one.csv");
  apergo::io::write_text_atomic(one_draw.path, "t,draw_id,x1\n0,0,1\n1,0,2\n");
  CHECK_THROWS_AS(
      static_cast<void>(apergo::io::read_ensemble(one_draw.path, 0)),
      apergo::Error);
}

TEST_CASE("vectors parse from files and inline text") {
  TempFile f("vec.csv");
  apergo::io::write_text_atomic(f.path, "1.5, -2\n3e-1\n");
  const Vector v = apergo::io::read_vector(f.path);
  REQUIRE(v.size() == 3);
  CHECK(v[0] == 1.5);
  CHECK(v[1] == -2.0);
  CHECK(v[2] == 0.3);

  const Vector w = apergo::io::parse_vector("1,2.5,-3");
  REQUIRE(w.size() == 3);
  CHECK(w[2] == -3.0);
  CHECK_THROWS_AS(static_cast<void>(apergo::io::parse_vector("1,zebra")),
                  apergo::Error);

  const auto list = apergo::io::parse_double_list(" 1, , 2 ,3 ");
  REQUIRE(list.size() == 3);
  CHECK(list[1] == 2.0);
}

TEST_CASE("digests are stable and content sensitive") {
  TempFile a("digest_a.txt");
  TempFile b("digest_b.txt");
  apergo::io::write_text_atomic(a.path, "same bytes\n");
  apergo::io::write_text_atomic(b.path, "same bytes\n");
  const std::string da = apergo::io::file_digest(a.path);
  CHECK(da.size() == 16);
  CHECK(da == apergo::io::file_digest(b.path));
  apergo::io::write_text_atomic(b.path, "other bytes\n");
  CHECK(da != apergo::io::file_digest(b.path));
}
