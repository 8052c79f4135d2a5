#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace kgon {

// A point with a stable identifier. Identifiers drive the symbolic perturbation
// (see predicates.hpp), so subsets of a point set must keep the original ids.
struct Point {
  Eigen::Vector2d pos{0.0, 0.0};
  std::int32_t id = -1;

  double x() const { return pos.x(); }
  double y() const { return pos.y(); }
};

inline double squared_distance(const Point& a, const Point& b) {
  return (a.pos - b.pos).squaredNorm();
}

// An immutable collection of distinct points with finite coordinates.
// Points built via from_coordinates get dense ids 0..n-1; subsets keep ids.
class PointSet {
 public:
  PointSet() = default;

  // Throws std::invalid_argument on non-finite coordinates or duplicates.
  static PointSet from_coordinates(const std::vector<Eigen::Vector2d>& coords);
  // Sub-selection by positions into `parent`; original ids are preserved.
  static PointSet subset(const PointSet& parent, const std::vector<int>& positions);

  int size() const { return static_cast<int>(pts_.size()); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](int pos) const { return pts_[static_cast<std::size_t>(pos)]; }
  const std::vector<Point>& points() const { return pts_; }

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

 private:
  std::vector<Point> pts_;
};

// Vertices in counterclockwise order. Fewer than three vertices marks a
// degenerate hull (single point or all input collinear).
struct ConvexPolygon {
  std::vector<Point> vertices;

  bool degenerate() const { return vertices.size() < 3; }
  int size() const { return static_cast<int>(vertices.size()); }
};

// Indices into ConvexPolygon::vertices admitting parallel supporting lines.
struct AntipodalPair {
  int first = 0;
  int second = 0;
};

// A solved region: the polygon, how many input points it contains (vertices
// and interior), and its derived measurements.
struct RegionSolution {
  ConvexPolygon polygon;
  int cardinality = 0;
  double area = 0.0;      // shoelace area of `polygon`
  double diameter = 0.0;  // max pairwise vertex distance
  bool optimal = true;    // false for heuristic output

  std::vector<std::int32_t> vertex_ids() const {
    std::vector<std::int32_t> ids;
    ids.reserve(polygon.vertices.size());
    for (const Point& v : polygon.vertices) ids.push_back(v.id);
    return ids;
  }
};

}  // namespace kgon
