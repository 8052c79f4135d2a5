#include <kgon/geometry.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace kgon {
namespace {

inline double cross2(const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
  return u.x() * v.y() - u.y() * v.x();
}

// Sign of cross(edge i, edge j) of a CCW polygon under symbolic perturbation.
// Adjacent edges share a vertex, where the four-point predicate degenerates to
// a three-point orientation.
int edge_cross_sos(const std::vector<Point>& v, int i, int j) {
  const int m = static_cast<int>(v.size());
  const int i1 = (i + 1) % m;
  const int j1 = (j + 1) % m;
  if (i == j) return 0;
  if (i1 == j)  // (b-a) x (c-b) == orient(a,b,c)
    return static_cast<int>(orient_sos(v[i], v[i1], v[j1]));
  if (j1 == i)  // (b-a) x (a-c) == -orient(c,a,b)
    return -static_cast<int>(orient_sos(v[j], v[i], v[i1]));
  return cross_sign_sos(v[i], v[i1], v[j], v[j1]);
}

int edge_cross_exact(const std::vector<Point>& v, int i, int j) {
  const int m = static_cast<int>(v.size());
  const int i1 = (i + 1) % m;
  const int j1 = (j + 1) % m;
  if (i == j) return 0;
  if (i1 == j) return static_cast<int>(orient(v[i], v[i1], v[j1]));
  if (j1 == i) return -static_cast<int>(orient(v[j], v[i], v[i1]));
  return cross_sign(v[i], v[i1], v[j], v[j1]);
}

}  // namespace

double triangle_area(const Point& a, const Point& b, const Point& c) {
  return 0.5 * std::fabs(cross2(b.pos - a.pos, c.pos - a.pos));
}

double polygon_area(const ConvexPolygon& poly) {
  if (poly.degenerate()) return 0.0;
  const Eigen::Vector2d anchor = poly.vertices.front().pos;
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < poly.vertices.size(); ++i)
    twice += cross2(poly.vertices[i].pos - anchor, poly.vertices[i + 1].pos - anchor);
  return 0.5 * twice;
}

ConvexPolygon convex_hull(const std::vector<Point>& pts) {
  ConvexPolygon poly;
  if (pts.empty()) return poly;
  std::vector<Point> s = pts;
  std::sort(s.begin(), s.end(), [](const Point& a, const Point& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    if (a.y() != b.y()) return a.y() < b.y();
    return a.id < b.id;
  });
  if (s.size() == 1) {
    poly.vertices = s;
    return poly;
  }
  auto build = [](auto first, auto last, std::vector<Point>& out) {
    for (auto it = first; it != last; ++it) {
      while (out.size() >= 2 &&
             orient(out[out.size() - 2], out.back(), *it) != Turn::Left)
        out.pop_back();
      out.push_back(*it);
    }
  };
  std::vector<Point> lower, upper;
  build(s.begin(), s.end(), lower);
  build(s.rbegin(), s.rend(), upper);
  lower.pop_back();
  upper.pop_back();
  poly.vertices = std::move(lower);
  poly.vertices.insert(poly.vertices.end(), upper.begin(), upper.end());
  return poly;
}

ConvexPolygon convex_hull(const PointSet& ps) { return convex_hull(ps.points()); }

std::vector<AntipodalPair> antipodal_pairs(const ConvexPolygon& poly) {
  const std::vector<Point>& v = poly.vertices;
  const int m = poly.size();
  std::vector<AntipodalPair> out;
  if (m < 2) return out;
  if (m == 2) {
    out.push_back({0, 1});
    return out;
  }
  std::set<std::pair<int, int>> seen;
  auto add = [&](int a, int b) {
    if (a == b) return;
    auto key = std::minmax(a, b);
    if (seen.insert(key).second) out.push_back({key.first, key.second});
  };
  int j = 1;
  int advances = 0;
  for (int i = 0; i < m; ++i) {
    // Move j while the next vertex is farther from the line of edge (i,i+1).
    while (edge_cross_sos(v, i, j) > 0) {
      j = (j + 1) % m;
      if (++advances > 3 * m) throw std::logic_error("antipodal_pairs: sweep did not settle");
    }
    add(i, j);
    add((i + 1) % m, j);
    if (edge_cross_exact(v, i, j) == 0) {
      // Parallel (or antiparallel) edges: the next vertex is equally far.
      add(i, (j + 1) % m);
      add((i + 1) % m, (j + 1) % m);
    }
  }
  return out;
}

Diameter polygon_diameter(const ConvexPolygon& poly) {
  Diameter d;
  if (poly.size() < 2) return d;
  double best2 = -1.0;
  for (const AntipodalPair& ap : antipodal_pairs(poly)) {
    const double s2 = squared_distance(poly.vertices[static_cast<std::size_t>(ap.first)],
                                       poly.vertices[static_cast<std::size_t>(ap.second)]);
    if (s2 > best2) {
      best2 = s2;
      d.pair = ap;
    }
  }
  d.value = std::sqrt(best2);
  return d;
}

std::vector<int> lune_positions(const PointSet& ps, int p_pos, int q_pos) {
  if (p_pos == q_pos) throw std::invalid_argument("lune: p and q must differ");
  const Point& p = ps[p_pos];
  const Point& q = ps[q_pos];
  std::vector<int> out;
  for (int i = 0; i < ps.size(); ++i) {
    const Point& r = ps[i];
    if (compare_squared_distance(r, p, p, q) <= 0 &&
        compare_squared_distance(r, q, p, q) <= 0)
      out.push_back(i);
  }
  return out;
}

PointSet lune_filter(const PointSet& ps, int p_pos, int q_pos) {
  return PointSet::subset(ps, lune_positions(ps, p_pos, q_pos));
}

bool contains_closed(const ConvexPolygon& poly, const Point& pt) {
  const std::vector<Point>& v = poly.vertices;
  const int m = poly.size();
  if (m == 0) return false;
  if (m == 1) return v[0].pos == pt.pos;
  auto on_segment = [&](const Point& a, const Point& b) {
    return orient(a, b, pt) == Turn::Collinear &&
           pt.x() >= std::min(a.x(), b.x()) && pt.x() <= std::max(a.x(), b.x()) &&
           pt.y() >= std::min(a.y(), b.y()) && pt.y() <= std::max(a.y(), b.y());
  };
  if (m == 2) return on_segment(v[0], v[1]);
  for (int i = 0; i < m; ++i) {
    const Point& a = v[static_cast<std::size_t>(i)];
    const Point& b = v[static_cast<std::size_t>((i + 1) % m)];
    const Turn t = orient(a, b, pt);
    if (t == Turn::Right) return false;
    if (t == Turn::Collinear && !on_segment(a, b)) return false;
  }
  return true;
}

bool contains_consistent(const ConvexPolygon& poly, const Point& pt) {
  const std::vector<Point>& v = poly.vertices;
  const int m = poly.size();
  for (const Point& vert : v)
    if (vert.id == pt.id) return true;
  if (m < 3) return false;  // perturbed segments have empty interior
  for (int i = 0; i < m; ++i) {
    if (orient_sos(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>((i + 1) % m)],
                   pt) != Turn::Left)
      return false;
  }
  return true;
}

int region_cardinality(const ConvexPolygon& poly, const PointSet& ps) {
  int count = 0;
  for (const Point& pt : ps)
    if (contains_consistent(poly, pt)) ++count;
  return count;
}

RegionSolution make_region_solution(const PointSet& ps, const std::vector<int>& ccw_positions,
                                    bool optimal) {
  RegionSolution sol;
  sol.polygon.vertices.reserve(ccw_positions.size());
  // Canonical starting vertex (smallest id) so the same polygon compares
  // equal no matter which solver produced it.
  std::size_t start = 0;
  for (std::size_t i = 1; i < ccw_positions.size(); ++i) {
    if (ps[ccw_positions[i]].id < ps[ccw_positions[start]].id) start = i;
  }
  for (std::size_t i = 0; i < ccw_positions.size(); ++i) {
    sol.polygon.vertices.push_back(ps[ccw_positions[(start + i) % ccw_positions.size()]]);
  }
  sol.area = polygon_area(sol.polygon);
  sol.diameter = polygon_diameter(sol.polygon).value;
  sol.cardinality = region_cardinality(sol.polygon, ps);
  sol.optimal = optimal;
  return sol;
}

}  // namespace kgon
