#include <doctest.h>

#include <kgon/area_diameter_solver.hpp>
#include <kgon/area_solver.hpp>
#include <kgon/geometry.hpp>
#include <kgon/heuristics.hpp>

#include <algorithm>
#include <cmath>

#include "test_util.hpp"

using namespace kgon;
using kgon_test::make_ps;
using kgon_test::random_uniform;

TEST_CASE("build_patches: anchoring, tiling, coverage") {
  PointSet tight = random_uniform(20, 1, 2.5);  // all inside 2.5 x 2.5
  PatchGrid one = build_patches(tight, 3.0, 1.98);
  REQUIRE(one.patches.size() == 1);
  CHECK(static_cast<int>(one.patches[0].members.size()) == 20);

  PointSet wide = random_uniform(60, 2, 20.0);
  PatchGrid tiling = build_patches(wide, 3.0, 3.0);  // step == size: no overlap
  int covered = 0;
  std::vector<int> owners(60, 0);
  for (const Patch& p : tiling.patches) {
    for (int pos : p.members) ++owners[static_cast<std::size_t>(pos)];
  }
  for (int c : owners) {
    CHECK(c >= 1);  // every point in at least one patch
    covered += c;
  }
  CHECK(covered >= 60);

  PatchGrid overlap = build_patches(wide, 3.0, 0.5);
  std::vector<int> counts(60, 0);
  for (const Patch& p : overlap.patches) {
    for (int pos : p.members) ++counts[static_cast<std::size_t>(pos)];
  }
  // With step < size, points away from the bounding-box border land in many
  // overlapping windows.
  int interior_deep = 0;
  for (int pos = 0; pos < 60; ++pos) {
    const Point& pt = wide[pos];
    if (pt.x() > 3.0 && pt.x() < 17.0 && pt.y() > 3.0 && pt.y() < 17.0) {
      ++interior_deep;
      CHECK(counts[static_cast<std::size_t>(pos)] >= 4);
    }
  }
  CHECK(interior_deep > 0);

  CHECK_THROWS_AS((void)build_patches(wide, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS((void)build_patches(wide, 3.0, 3.5), std::invalid_argument);
}

TEST_CASE("solve_patched_A: single patch equals the global solver") {
  PointSet tight = random_uniform(15, 5, 2.8);
  auto patched = solve_patched_A(tight, 2.0, 3.0, 1.98);
  auto global = max_points_under_area(tight, 2.0);
  REQUIRE(patched.has_value() == global.has_value());
  if (patched) {
    CHECK(patched->cardinality == global->cardinality);
    CHECK(patched->area == doctest::Approx(global->area));
  }
}

TEST_CASE("solve_patched_A: diameter bounded by the patch diagonal") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    PointSet ps = random_uniform(60, seed + 40);
    auto sol = solve_patched_A(ps, 4.0, 3.0, 1.0);
    if (!sol) continue;
    CHECK(sol->diameter <= 3.0 * std::sqrt(2.0) + 1e-9);
    CHECK(sol->area <= 4.0 + 1e-12);
    CHECK(region_cardinality(sol->polygon, ps) >= sol->cardinality);
  }
}

TEST_CASE("solve_patched_A: cardinality at most AD with D = patch diagonal") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    PointSet ps = random_uniform(12, seed + 70);
    auto patched = solve_patched_A(ps, 4.0, 3.0, 0.5);
    auto ad = max_points_under_area_diameter(ps, 4.0, 3.0 * std::sqrt(2.0));
    int pk = patched ? patched->cardinality : 0;
    int ak = ad ? ad->cardinality : 0;
    CHECK(pk <= ak);
  }
}

TEST_CASE("shrinking the step never loses cardinality") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_uniform(50, seed + 90);
    auto coarse = solve_patched_A(ps, 4.0, 3.0, 1.98);
    auto fine = solve_patched_A(ps, 4.0, 3.0, 0.5);
    int ck = coarse ? coarse->cardinality : 0;
    int fk = fine ? fine->cardinality : 0;
    CHECK(fk >= ck);
  }
}

TEST_CASE("hull_peel_heuristic: exact on small patches, valid always") {
  // Hull already small enough: returns the full patch hull.
  PointSet tiny = make_ps({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}});
  auto full = hull_peel_heuristic(tiny, 2.0);
  REQUIRE(full);
  CHECK(full->cardinality == 5);
  CHECK(full->area == doctest::Approx(1.0));

  // <= 25 points: exact path; equals the per-patch optimum by construction.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_uniform(18, seed + 110, 4.0);
    auto heur = hull_peel_heuristic(ps, 3.0);
    auto exact = max_points_under_area(ps, 3.0);
    int hk = heur ? heur->cardinality : 0;
    int ek = exact ? exact->cardinality : 0;
    CHECK(hk == ek);
  }

  // Greedy path (> 25 points): never better than the exact solver, always
  // feasible when it returns.
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    PointSet ps = random_uniform(40, seed + 130, 4.0);
    auto heur = hull_peel_heuristic(ps, 3.0);
    auto exact = max_points_under_area(ps, 3.0);
    int hk = heur ? heur->cardinality : 0;
    int ek = exact ? exact->cardinality : 0;
    CHECK(hk <= ek);
    if (heur) {
      CHECK(heur->area <= 3.0 + 1e-12);
      CHECK_FALSE(heur->optimal);
      CHECK(region_cardinality(heur->polygon, ps) == heur->cardinality);
    }
  }
}

TEST_CASE("patched heuristic never beats patched-A") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_uniform(70, seed + 150);
    auto exact = solve_patched_A(ps, 4.0, 3.0, 0.5);
    auto heur = solve_patched_heuristic(ps, 4.0, 3.0, 0.5);
    int ek = exact ? exact->cardinality : 0;
    int hk = heur ? heur->cardinality : 0;
    CHECK(hk <= ek);
  }
}
