#include <kgon/types.hpp>

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kgon {

PointSet PointSet::from_coordinates(const std::vector<Eigen::Vector2d>& coords) {
  PointSet ps;
  ps.pts_.reserve(coords.size());
  std::map<std::pair<double, double>, int> seen;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Eigen::Vector2d& c = coords[i];
    if (!std::isfinite(c.x()) || !std::isfinite(c.y()))
      throw std::invalid_argument("PointSet: non-finite coordinate at index " +
                                  std::to_string(i));
    auto [it, inserted] = seen.emplace(std::make_pair(c.x(), c.y()), static_cast<int>(i));
    if (!inserted)
      throw std::invalid_argument("PointSet: duplicate point at indices " +
                                  std::to_string(it->second) + " and " + std::to_string(i));
    ps.pts_.push_back(Point{c, static_cast<std::int32_t>(i)});
  }
  return ps;
}

PointSet PointSet::subset(const PointSet& parent, const std::vector<int>& positions) {
  PointSet ps;
  ps.pts_.reserve(positions.size());
  for (int pos : positions) {
    if (pos < 0 || pos >= parent.size())
      throw std::invalid_argument("PointSet::subset: position out of range");
    ps.pts_.push_back(parent[pos]);
  }
  return ps;
}

}  // namespace kgon
