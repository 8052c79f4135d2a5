#include <doctest.h>

#include <kgon/data_pipeline.hpp>

#include <cmath>
#include <sstream>

#include "test_util.hpp"

using namespace kgon;

TEST_CASE("generate: determinism, bounds, n=0") {
  GeneratorConfig cfg;
  cfg.n = 0;
  CHECK(generate_points(cfg).empty());

  cfg.n = 50;
  cfg.seed = 123;
  PointSet a = generate_points(cfg);
  PointSet b = generate_points(cfg);
  REQUIRE(a.size() == 50);
  for (int i = 0; i < 50; ++i) {
    CHECK(a[i].x() == b[i].x());  // byte-identical for identical config
    CHECK(a[i].y() == b[i].y());
    CHECK(a[i].x() >= 0.0);
    CHECK(a[i].x() <= 20.0);
    CHECK(a[i].y() >= 0.0);
    CHECK(a[i].y() <= 20.0);
  }
}

TEST_CASE("gaussian: inside the square, empirical sigma close to target") {
  GeneratorConfig cfg;
  cfg.kind = GeneratorConfig::Kind::Gaussian;
  cfg.n = 100;
  cfg.sigma = 0.5;
  double sum_std = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.seed = seed;
    PointSet ps = generate_points(cfg);
    double mx = 0.0, my = 0.0;
    for (const Point& p : ps) {
      CHECK(p.x() >= 0.0);
      CHECK(p.x() <= 20.0);
      CHECK(p.y() >= 0.0);
      CHECK(p.y() <= 20.0);
      mx += p.x();
      my += p.y();
    }
    mx /= ps.size();
    my /= ps.size();
    double vx = 0.0, vy = 0.0;
    for (const Point& p : ps) {
      vx += (p.x() - mx) * (p.x() - mx);
      vy += (p.y() - my) * (p.y() - my);
    }
    sum_std += 0.5 * (std::sqrt(vx / ps.size()) + std::sqrt(vy / ps.size()));
  }
  double mean_std = sum_std / 100.0;
  CHECK(mean_std > 0.4);  // within 20% of sigma = 0.5
  CHECK(mean_std < 0.6);
}

TEST_CASE("load_points: mm passthrough and pixel filtering") {
  std::istringstream mm("x_mm,y_mm\n1.5,2.5\n3,4\n");
  PointSet a = load_points(mm, {});
  REQUIRE(a.size() == 2);
  CHECK(a[0].x() == 1.5);
  CHECK(a[1].y() == 4.0);

  // 5 rows, 2 below the 0.86 cutoff (strictly below dropped, 0.86 kept),
  // coordinates divided by px_per_mm.
  std::istringstream px(
      "x_px,y_px,accuracy\n"
      "10,20,0.9\n"
      "30,40,0.85\n"
      "50,60,0.86\n"
      "70,80,0.2\n"
      "90,100,1.0\n");
  IngestConfig cfg;
  cfg.px_per_mm = 10.0;
  PointSet b = load_points(px, cfg);
  REQUIRE(b.size() == 3);
  CHECK(b[0].x() == doctest::Approx(1.0));
  CHECK(b[1].x() == doctest::Approx(5.0));
  CHECK(b[2].y() == doctest::Approx(10.0));

  // px_per_mm = 1: passthrough.
  std::istringstream px1("x_px,y_px,accuracy\n7,9,0.9\n");
  IngestConfig unit;
  unit.px_per_mm = 1.0;
  PointSet c = load_points(px1, unit);
  CHECK(c[0].x() == 7.0);
  CHECK(c[0].y() == 9.0);
}

TEST_CASE("load_points: errors carry line numbers") {
  std::istringstream bad_header("foo,bar\n1,2\n");
  CHECK_THROWS_WITH_AS((void)load_points(bad_header, {}), doctest::Contains("line 1"),
                       std::invalid_argument);

  std::istringstream bad_row("x_mm,y_mm\n1,2\nxyz,4\n");
  CHECK_THROWS_WITH_AS((void)load_points(bad_row, {}), doctest::Contains("line 3"),
                       std::invalid_argument);

  std::istringstream missing_field("x_mm,y_mm\n1\n");
  CHECK_THROWS_WITH_AS((void)load_points(missing_field, {}), doctest::Contains("line 2"),
                       std::invalid_argument);

  std::istringstream non_finite("x_mm,y_mm\n1,inf\n");
  CHECK_THROWS_AS((void)load_points(non_finite, {}), std::invalid_argument);

  std::istringstream dup("x_mm,y_mm\n1,2\n1,2\n");
  CHECK_THROWS_AS((void)load_points(dup, {}), std::invalid_argument);

  std::istringstream px_no_factor("x_px,y_px,accuracy\n1,2,0.9\n");
  CHECK_THROWS_WITH_AS((void)load_points(px_no_factor, {}), doctest::Contains("px_per_mm"),
                       std::invalid_argument);
}

TEST_CASE("summarize: frozen examples and direct-scan equivalence") {
  PointSet two = kgon_test::make_ps({{0, 0}, {1, 0}});
  DatasetSummary s2 = summarize(two);
  CHECK(s2.ann_mean == doctest::Approx(1.0));
  CHECK(s2.ann_std == doctest::Approx(0.0));

  PointSet corners = kgon_test::make_ps({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(summarize(corners).ann_mean == doctest::Approx(1.0));

  PointSet one = kgon_test::make_ps({{0, 0}});
  CHECK_THROWS_AS((void)summarize(one), std::invalid_argument);

  PointSet rnd = kgon_test::random_uniform(50, 77);
  DatasetSummary s = summarize(rnd);
  double sum = 0.0;
  std::vector<double> nn;
  for (int i = 0; i < 50; ++i) {
    double best = 1e300;
    for (int j = 0; j < 50; ++j) {
      if (i != j) best = std::min(best, (rnd[i].pos - rnd[j].pos).norm());
    }
    nn.push_back(best);
    sum += best;
  }
  double mean = sum / 50.0;
  double var = 0.0;
  for (double d : nn) var += (d - mean) * (d - mean);
  CHECK(s.ann_mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(s.ann_std == doctest::Approx(std::sqrt(var / 50.0)).epsilon(1e-9));
}
