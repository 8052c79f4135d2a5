#pragma once

#include <kgon/data_pipeline.hpp>
#include <kgon/types.hpp>

#include <initializer_list>
#include <utility>
#include <vector>

namespace kgon_test {

inline kgon::PointSet make_ps(std::initializer_list<std::pair<double, double>> coords) {
  std::vector<Eigen::Vector2d> v;
  for (const auto& [x, y] : coords) v.emplace_back(x, y);
  return kgon::PointSet::from_coordinates(v);
}

inline kgon::PointSet random_uniform(int n, std::uint64_t seed, double square = 20.0) {
  kgon::GeneratorConfig cfg;
  cfg.kind = kgon::GeneratorConfig::Kind::Uniform;
  cfg.n = n;
  cfg.square = square;
  cfg.seed = seed;
  return kgon::generate_points(cfg);
}

// The running example: unit-style 4x4 square with one interior point.
inline kgon::PointSet example5() {
  return make_ps({{0, 0}, {4, 0}, {0, 4}, {4, 4}, {1, 2}});
}

}  // namespace kgon_test
