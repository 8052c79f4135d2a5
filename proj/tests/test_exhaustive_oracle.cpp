#include <doctest.h>

#include <kgon/exhaustive_oracle.hpp>

#include <algorithm>
#include <random>

#include "test_util.hpp"

using namespace kgon;
using kgon_test::example5;
using kgon_test::make_ps;
using kgon_test::random_uniform;

TEST_CASE("oracle: frozen examples") {
  PointSet tri = make_ps({{0, 0}, {3, 0}, {0, 3}});
  CHECK(*oracle_min_area(tri, 3) == doctest::Approx(4.5));

  PointSet ps = example5();
  CHECK(*oracle_min_area(ps, 4) == doctest::Approx(8.0));
  CHECK(*oracle_min_area(ps, 3) == doctest::Approx(2.0));
  CHECK(*oracle_min_area(ps, 5) == doctest::Approx(16.0));
  CHECK_FALSE(oracle_min_area(ps, 6).has_value());  // k > n
  CHECK_FALSE(oracle_min_area(ps, 4, 5.0).has_value());  // diameter-bound example
}

TEST_CASE("oracle max_points: trivial bounds and self-consistency") {
  PointSet ps = random_uniform(10, 3);
  CHECK(oracle_max_points(ps, 1e9, 1e9) == 10);
  // An area below every triangle and a diameter below every pair: no region.
  CHECK(oracle_max_points(ps, 1e-12, 1e-6) == 0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointSet rnd = random_uniform(10, seed);
    ExhaustiveOracle oracle(rnd);
    int k = oracle.max_count(4.0, 4.0);
    if (k >= 3) CHECK(*oracle.min_area(k, 4.0) <= 4.0);
  }
}

TEST_CASE("oracle is invariant under input permutation") {
  PointSet ps = random_uniform(9, 17);
  std::vector<int> perm(9);
  for (int i = 0; i < 9; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::mt19937_64 rng(1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Eigen::Vector2d> coords;
  for (int pos : perm) coords.push_back(ps[pos].pos);
  PointSet shuffled = PointSet::from_coordinates(coords);
  for (int k = 3; k <= 9; ++k) {
    auto a = oracle_min_area(ps, k, 6.0);
    auto b = oracle_min_area(shuffled, k, 6.0);
    REQUIRE(a.has_value() == b.has_value());
    if (a) CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
  }
}

TEST_CASE("oracle solution witnesses are feasible") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_uniform(11, seed + 50);
    ExhaustiveOracle oracle(ps);
    for (int k = 3; k <= 11; ++k) {
      auto sol = oracle.min_area_solution(k, 8.0);
      if (!sol) continue;
      CHECK(sol->cardinality == k);
      CHECK(sol->diameter <= 8.0 + 1e-12);
      CHECK(sol->area == doctest::Approx(*oracle.min_area(k, 8.0)));
    }
  }
}
