#include <kgon/exhaustive_oracle.hpp>

#include <kgon/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace kgon {

namespace {

double shoelace_twice(const std::vector<Point>& v) {
  double s = 0.0;
  const int m = static_cast<int>(v.size());
  for (int i = 0; i < m; ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % m];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return s;
}

}  // namespace

ExhaustiveOracle::ExhaustiveOracle(const PointSet& ps, int max_points) : ps_(&ps) {
  const int n = ps.size();
  if (n > max_points) {
    throw std::invalid_argument("ExhaustiveOracle: point set too large (" + std::to_string(n) +
                                " > " + std::to_string(max_points) + ")");
  }
  std::unordered_map<std::int32_t, int> pos_of_id;
  for (int i = 0; i < n; ++i) pos_of_id[ps[i].id] = i;

  std::set<std::vector<std::int32_t>> seen;  // sorted hull vertex ids
  std::vector<Point> subset;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    subset.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1ul << i)) subset.push_back(ps[i]);
    }
    ConvexPolygon hull = convex_hull(subset);
    std::vector<std::int32_t> key;
    key.reserve(hull.vertices.size());
    for (const Point& p : hull.vertices) key.push_back(p.id);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;

    Candidate cand;
    cand.hull_positions.reserve(hull.vertices.size());
    for (const Point& p : hull.vertices) cand.hull_positions.push_back(pos_of_id.at(p.id));
    cand.area = 0.5 * std::abs(shoelace_twice(hull.vertices));
    cand.diameter2 = 0.0;
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < hull.vertices.size(); ++j) {
        cand.diameter2 = std::max(cand.diameter2, squared_distance(hull.vertices[i], hull.vertices[j]));
      }
    }
    cand.cardinality = 0;
    for (int i = 0; i < n; ++i) {
      if (contains_consistent(hull, ps[i])) ++cand.cardinality;
    }
    candidates_.push_back(std::move(cand));
  }
}

std::optional<double> ExhaustiveOracle::min_area(int k, std::optional<double> max_diameter) const {
  auto sol = min_area_solution(k, max_diameter);
  if (!sol) return std::nullopt;
  return sol->area;
}

std::optional<RegionSolution> ExhaustiveOracle::min_area_solution(
    int k, std::optional<double> max_diameter) const {
  const double d2_cap = max_diameter ? (*max_diameter) * (*max_diameter)
                                     : std::numeric_limits<double>::infinity();
  const Candidate* best = nullptr;
  std::vector<std::int32_t> best_ids;
  for (const Candidate& c : candidates_) {
    if (c.cardinality != k) continue;
    if (c.diameter2 > d2_cap) continue;
    std::vector<std::int32_t> ids;
    ids.reserve(c.hull_positions.size());
    for (int pos : c.hull_positions) ids.push_back((*ps_)[pos].id);
    std::sort(ids.begin(), ids.end());
    if (best == nullptr || c.area < best->area ||
        (c.area == best->area &&
         (c.hull_positions.size() < best->hull_positions.size() ||
          (c.hull_positions.size() == best->hull_positions.size() && ids < best_ids)))) {
      best = &c;
      best_ids = std::move(ids);
    }
  }
  if (best == nullptr) return std::nullopt;
  return make_region_solution(*ps_, best->hull_positions, true);
}

int ExhaustiveOracle::max_count(double max_area, std::optional<double> max_diameter) const {
  const double d2_cap = max_diameter ? (*max_diameter) * (*max_diameter)
                                     : std::numeric_limits<double>::infinity();
  int best = 0;
  for (const Candidate& c : candidates_) {
    if (c.hull_positions.size() < 3) continue;  // degenerate regions don't count
    if (c.area <= max_area && c.diameter2 <= d2_cap) best = std::max(best, c.cardinality);
  }
  return best;
}

std::optional<double> ExhaustiveOracle::min_area_with_diametral_pair(int k, int p_pos,
                                                                     int q_pos) const {
  const double pq2 = squared_distance((*ps_)[p_pos], (*ps_)[q_pos]);
  std::optional<double> best;
  for (const Candidate& c : candidates_) {
    if (c.cardinality != k) continue;
    if (c.diameter2 != pq2) continue;
    const bool has_p = std::find(c.hull_positions.begin(), c.hull_positions.end(), p_pos) !=
                       c.hull_positions.end();
    const bool has_q = std::find(c.hull_positions.begin(), c.hull_positions.end(), q_pos) !=
                       c.hull_positions.end();
    if (!has_p || !has_q) continue;
    if (!best || c.area < *best) best = c.area;
  }
  return best;
}

std::optional<double> oracle_min_area(const PointSet& ps, int k, std::optional<double> max_diameter,
                                      int max_points) {
  return ExhaustiveOracle(ps, max_points).min_area(k, max_diameter);
}

int oracle_max_points(const PointSet& ps, double max_area, std::optional<double> max_diameter,
                      int max_points) {
  return ExhaustiveOracle(ps, max_points).max_count(max_area, max_diameter);
}

}  // namespace kgon
