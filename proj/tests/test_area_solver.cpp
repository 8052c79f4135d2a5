#include <doctest.h>

#include <kgon/area_solver.hpp>
#include <kgon/exhaustive_oracle.hpp>
#include <kgon/geometry.hpp>

#include <algorithm>
#include <cmath>

#include "test_util.hpp"

using namespace kgon;
using kgon_test::example5;
using kgon_test::random_uniform;

TEST_CASE("min_area_k: frozen examples") {
  PointSet ps = example5();
  auto k3 = min_area_k_basic(ps, 3);
  REQUIRE(k3);
  CHECK(k3->area == doctest::Approx(2.0));
  std::vector<std::int32_t> ids = k3->vertex_ids();
  std::sort(ids.begin(), ids.end());
  CHECK(ids == std::vector<std::int32_t>{0, 2, 4});  // (0,0),(0,4),(1,2)

  auto k4 = min_area_k_sweep(ps, 4);
  REQUIRE(k4);
  CHECK(k4->area == doctest::Approx(8.0));
  auto k5 = min_area_k_sweep(ps, 5);
  REQUIRE(k5);
  CHECK(k5->area == doctest::Approx(16.0));  // k = n -> hull

  CHECK_THROWS_AS((void)min_area_k(ps, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)min_area_k(ps, 6), std::invalid_argument);
}

TEST_CASE("variants agree with each other and the oracle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    PointSet ps = random_uniform(11, seed);
    ExhaustiveOracle oracle(ps);
    for (int k = 3; k <= ps.size(); ++k) {
      auto basic = min_area_k(ps, k, AreaVariant::Basic);
      auto sweep = min_area_k(ps, k, AreaVariant::Sweep);
      auto compressed = min_area_k(ps, k, AreaVariant::SweepCompressed);
      auto ref = oracle.min_area(k);
      REQUIRE(basic.has_value() == ref.has_value());
      REQUIRE(sweep.has_value() == ref.has_value());
      REQUIRE(compressed.has_value() == ref.has_value());
      if (!ref) continue;
      CHECK(basic->area == doctest::Approx(*ref).epsilon(1e-9));
      CHECK(sweep->area == doctest::Approx(*ref).epsilon(1e-9));
      CHECK(compressed->area == doctest::Approx(*ref).epsilon(1e-9));
      // Identical tie-broken solutions across variants.
      CHECK(basic->vertex_ids() == sweep->vertex_ids());
      CHECK(sweep->vertex_ids() == compressed->vertex_ids());
      // Exact cardinality by independent recount.
      CHECK(region_cardinality(sweep->polygon, ps) == k);
    }
  }
}

TEST_CASE("per-instance monotonicity of min area in k") {
  for (std::uint64_t seed = 20; seed < 26; ++seed) {
    PointSet ps = random_uniform(18, seed);
    double prev = 0.0;
    for (int k = 3; k <= ps.size(); ++k) {
      auto sol = min_area_k_sweep(ps, k);
      REQUIRE(sol);
      CHECK(sol->area >= prev - 1e-12);
      prev = sol->area;
    }
  }
}

TEST_CASE("compressed sweep stores no more entries, same results") {
  PointSet ps = random_uniform(30, 4);
  ARunStats sweep_stats, comp_stats;
  auto sweep = min_area_k(ps, 12, AreaVariant::Sweep, &sweep_stats);
  auto comp = min_area_k(ps, 12, AreaVariant::SweepCompressed, &comp_stats);
  REQUIRE(sweep);
  REQUIRE(comp);
  CHECK(sweep->area == comp->area);
  CHECK(comp_stats.entries_created < sweep_stats.entries_created);
}

TEST_CASE("max_points_under_area") {
  PointSet ps = random_uniform(20, 9);
  double hull_area = polygon_area(convex_hull(ps));
  auto all = max_points_under_area(ps, hull_area + 1.0);
  REQUIRE(all);
  CHECK(all->cardinality == 20);  // A >= hull area -> k = n

  CHECK_FALSE(max_points_under_area(ps, 1e-15).has_value());

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    PointSet small = random_uniform(12, seed + 30);
    auto got = max_points_under_area(small, 4.0);
    int want = oracle_max_points(small, 4.0, std::nullopt);
    CHECK((got ? got->cardinality : 0) == want);
    if (got) CHECK(got->area <= 4.0 + 1e-12);
  }
}

TEST_CASE("early-exit order and pruning equivalence") {
  PointSet ps = random_uniform(15, 2);
  std::vector<BottomCandidate> order = area_early_exit_order(ps);
  REQUIRE(static_cast<int>(order.size()) == ps.size());
  // Descending above-count; topmost point has no points above.
  for (std::size_t i = 1; i < order.size(); ++i) {
    CHECK(order[i - 1].above >= order[i].above);
  }
  CHECK(order.back().above == 0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PointSet rnd = random_uniform(12, seed + 1000);
    for (int k : {3, 6, 12}) {
      auto pruned = min_area_k(rnd, k, AreaVariant::Sweep, nullptr, true);
      auto full = min_area_k(rnd, k, AreaVariant::Sweep, nullptr, false);
      REQUIRE(pruned.has_value() == full.has_value());
      if (pruned) {
        CHECK(pruned->area == full->area);
        CHECK(pruned->vertex_ids() == full->vertex_ids());
      }
    }
  }
}
