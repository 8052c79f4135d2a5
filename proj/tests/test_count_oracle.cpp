#include <doctest.h>

#include <kgon/count_oracle.hpp>
#include <kgon/geometry.hpp>
#include <kgon/predicates.hpp>

#include <random>

#include "test_util.hpp"

using namespace kgon;
using kgon_test::make_ps;
using kgon_test::random_uniform;

namespace {

// Direct strict-interior count under the perturbed convention.
int direct_triangle_count(const PointSet& ps, int a, int b, int c) {
  ConvexPolygon tri;
  tri.vertices = {ps[a], ps[b], ps[c]};
  if (orient_sos(ps[a], ps[b], ps[c]) == Turn::Right) std::swap(tri.vertices[1], tri.vertices[2]);
  int count = 0;
  for (int i = 0; i < ps.size(); ++i) {
    if (i == a || i == b || i == c) continue;
    if (contains_consistent(tri, ps[i])) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("below: frozen examples") {
  PointSet above = make_ps({{0, 0}, {2, 0}, {1, 1}});
  CHECK(CountOracle(above).below(0, 1) == 0);
  PointSet under = make_ps({{0, 0}, {2, 0}, {1, -1}});
  CHECK(CountOracle(under).below(0, 1) == 1);
}

TEST_CASE("below: symmetric and equal to a direct scan") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PointSet ps = random_uniform(50, seed);
    CountOracle oracle(ps);
    for (int i = 0; i < ps.size(); ++i) {
      for (int j = i + 1; j < ps.size(); ++j) {
        int direct = 0;
        for (int r = 0; r < ps.size(); ++r) {
          if (r == i || r == j) continue;
          const Point &a = x_less(ps[i], ps[j]) ? ps[i] : ps[j];
          const Point &b = x_less(ps[i], ps[j]) ? ps[j] : ps[i];
          if (x_less(a, ps[r]) && x_less(ps[r], b) && orient_sos(a, b, ps[r]) == Turn::Right) {
            ++direct;
          }
        }
        CHECK(oracle.below(i, j) == direct);
        CHECK(oracle.below(j, i) == oracle.below(i, j));
      }
    }
  }
}

TEST_CASE("triangle_count: frozen example and permutation invariance") {
  PointSet ps = make_ps({{0, 0}, {4, 0}, {0, 4}, {1, 2}});
  CountOracle oracle(ps);
  CHECK(oracle.triangle_count(0, 1, 2) == 1);  // (1,2) strictly inside
  CHECK(oracle.triangle_count(1, 2, 0) == 1);
  CHECK(oracle.triangle_count(2, 0, 1) == 1);
  CHECK(oracle.triangle_count(0, 2, 1) == 1);
  CHECK(oracle.triangle_count(0, 1, 3) == 0);  // empty interior
}

TEST_CASE("triangle_count: 10^4 random queries match direct counting") {
  PointSet ps = random_uniform(60, 12345);
  CountOracle oracle(ps);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(0, ps.size() - 1);
  int done = 0;
  while (done < 10000) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    ++done;
    REQUIRE(oracle.triangle_count(a, b, c) == direct_triangle_count(ps, a, b, c));
  }
}

TEST_CASE("triangle_count: sum rule over interior splits") {
  PointSet ps = random_uniform(60, 777);
  CountOracle oracle(ps);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, ps.size() - 1);
  int done = 0;
  while (done < 1000) {
    int a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
    ConvexPolygon tri;
    tri.vertices = {ps[a], ps[b], ps[c]};
    if (orient_sos(ps[a], ps[b], ps[c]) == Turn::Right) {
      std::swap(tri.vertices[1], tri.vertices[2]);
    }
    bool inside = contains_consistent(tri, ps[d]) &&
                  ps[d].id != ps[a].id && ps[d].id != ps[b].id && ps[d].id != ps[c].id;
    if (!inside) continue;
    ++done;
    REQUIRE(oracle.triangle_count(a, b, c) == oracle.triangle_count(a, b, d) +
                                                  oracle.triangle_count(b, c, d) +
                                                  oracle.triangle_count(c, a, d) + 1);
  }
}
