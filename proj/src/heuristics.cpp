#include <kgon/heuristics.hpp>

#include <kgon/area_solver.hpp>
#include <kgon/exhaustive_oracle.hpp>
#include <kgon/geometry.hpp>
#include <kgon/predicates.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace kgon {

namespace {

bool better_patch_solution(const RegionSolution& a, const RegionSolution& b) {
  if (a.cardinality != b.cardinality) return a.cardinality > b.cardinality;
  return a.area < b.area;
}

// Best solution over all patches under a per-patch solver. Ties across
// patches go to the lower patch index (first hit wins).
template <typename Solver>
std::optional<RegionSolution> best_over_patches(const PointSet& ps, double size, double step,
                                                Solver&& solve_patch) {
  PatchGrid grid = build_patches(ps, size, step);
  std::optional<RegionSolution> best;
  for (const Patch& patch : grid.patches) {
    if (static_cast<int>(patch.members.size()) < 3) continue;
    PointSet sub = PointSet::subset(ps, patch.members);
    std::optional<RegionSolution> sol = solve_patch(sub);
    if (!sol) continue;
    if (!best || better_patch_solution(*sol, *best)) best = std::move(sol);
  }
  return best;
}

// Positions of the current point multiset that survive inside `poly` under
// the perturbed containment convention.
std::vector<int> contained_positions(const ConvexPolygon& poly, const PointSet& ps,
                                     const std::vector<int>& candidates) {
  std::vector<int> kept;
  kept.reserve(candidates.size());
  for (int pos : candidates) {
    if (contains_consistent(poly, ps[pos])) kept.push_back(pos);
  }
  return kept;
}

struct PeelMove {
  ConvexPolygon polygon;
  std::vector<int> contained;
  double area = 0.0;
  double score = -1.0;                    // area drop per point lost
  std::int32_t vertex_id = -1;            // discarded hull vertex
  bool is_replace = false;                // false: drop, true: replace
  std::int32_t replacement_id = std::numeric_limits<std::int32_t>::max();
};

bool better_move(const PeelMove& a, const PeelMove& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.vertex_id != b.vertex_id) return a.vertex_id < b.vertex_id;
  if (a.is_replace != b.is_replace) return !a.is_replace;
  return a.replacement_id < b.replacement_id;
}

std::optional<RegionSolution> greedy_hull_peel(const PointSet& ps, double max_area) {
  std::vector<int> contained(static_cast<std::size_t>(ps.size()));
  for (int i = 0; i < ps.size(); ++i) contained[static_cast<std::size_t>(i)] = i;

  ConvexPolygon poly = convex_hull(ps);
  double area = polygon_area(poly);
  std::unordered_map<std::int32_t, int> id_to_pos;
  for (int i = 0; i < ps.size(); ++i) id_to_pos.emplace(ps[i].id, i);

  while (area > max_area) {
    if (poly.degenerate() || static_cast<int>(contained.size()) < 3) return std::nullopt;

    std::optional<PeelMove> best;
    const int m = poly.size();
    for (int vi = 0; vi < m; ++vi) {
      const Point& prev = poly.vertices[static_cast<std::size_t>((vi + m - 1) % m)];
      const Point& v = poly.vertices[static_cast<std::size_t>(vi)];
      const Point& next = poly.vertices[static_cast<std::size_t>((vi + 1) % m)];
      const int v_pos = id_to_pos.at(v.id);

      auto consider = [&](ConvexPolygon cand_poly, bool is_replace, std::int32_t repl_id) {
        std::vector<int> kept = contained_positions(cand_poly, ps, contained);
        int lost = static_cast<int>(contained.size()) - static_cast<int>(kept.size());
        if (lost <= 0) return;  // a peel must shed at least the vertex itself
        double cand_area = polygon_area(cand_poly);
        PeelMove move;
        move.polygon = std::move(cand_poly);
        move.contained = std::move(kept);
        move.area = cand_area;
        move.score = (area - cand_area) / static_cast<double>(lost);
        move.vertex_id = v.id;
        move.is_replace = is_replace;
        move.replacement_id = repl_id;
        if (!best || better_move(move, *best)) best = std::move(move);
      };

      // Drop v: the new region is the hull of the remaining contained points.
      {
        std::vector<int> rest;
        rest.reserve(contained.size());
        for (int pos : contained) {
          if (pos != v_pos) rest.push_back(pos);
        }
        ConvexPolygon dropped = convex_hull(PointSet::subset(ps, rest));
        if (!dropped.degenerate()) consider(std::move(dropped), false, v.id);
      }

      // Replace v by a contained point strictly inside triangle(prev, v, next);
      // substituting such a point keeps the vertex cycle convex.
      for (int pos : contained) {
        const Point& w = ps[pos];
        if (w.id == prev.id || w.id == v.id || w.id == next.id) continue;
        if (orient_sos(prev, v, w) != Turn::Left) continue;
        if (orient_sos(v, next, w) != Turn::Left) continue;
        if (orient_sos(next, prev, w) != Turn::Left) continue;
        ConvexPolygon replaced = poly;
        replaced.vertices[static_cast<std::size_t>(vi)] = w;
        consider(std::move(replaced), true, w.id);
      }
    }

    if (!best) return std::nullopt;
    poly = std::move(best->polygon);
    contained = std::move(best->contained);
    area = best->area;
  }

  if (poly.degenerate()) return std::nullopt;
  std::vector<int> positions;
  positions.reserve(poly.vertices.size());
  for (const Point& v : poly.vertices) positions.push_back(id_to_pos.at(v.id));
  RegionSolution sol = make_region_solution(ps, positions, /*optimal=*/false);
  return sol;
}

}  // namespace

PatchGrid build_patches(const PointSet& ps, double size, double step) {
  if (!(size > 0.0)) throw std::invalid_argument("patch size must be positive");
  if (!(step > 0.0) || step > size) {
    throw std::invalid_argument("patch step must satisfy 0 < step <= size");
  }

  PatchGrid grid;
  grid.patch_size = size;
  grid.step = step;
  if (ps.empty()) return grid;

  double min_x = ps[0].x(), max_x = ps[0].x();
  double min_y = ps[0].y(), max_y = ps[0].y();
  for (const Point& p : ps) {
    min_x = std::min(min_x, p.x());
    max_x = std::max(max_x, p.x());
    min_y = std::min(min_y, p.y());
    max_y = std::max(max_y, p.y());
  }

  auto axis_count = [&](double extent) {
    if (extent <= size) return 1;
    return static_cast<int>(std::ceil((extent - size) / step)) + 1;
  };
  const int nx = axis_count(max_x - min_x);
  const int ny = axis_count(max_y - min_y);

  grid.patches.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      Patch patch;
      patch.x0 = min_x + static_cast<double>(ix) * step;
      patch.y0 = min_y + static_cast<double>(iy) * step;
      for (int pos = 0; pos < ps.size(); ++pos) {
        const Point& p = ps[pos];
        if (p.x() >= patch.x0 && p.x() <= patch.x0 + size && p.y() >= patch.y0 &&
            p.y() <= patch.y0 + size) {
          patch.members.push_back(pos);
        }
      }
      grid.patches.push_back(std::move(patch));
    }
  }
  return grid;
}

std::optional<RegionSolution> solve_patched_A(const PointSet& ps, double max_area, double size,
                                              double step) {
  if (!(max_area > 0.0)) throw std::invalid_argument("max_area must be positive");
  return best_over_patches(ps, size, step, [&](const PointSet& sub) {
    return max_points_under_area(sub, max_area, AreaVariant::Sweep);
  });
}

std::optional<RegionSolution> hull_peel_heuristic(const PointSet& patch_points, double max_area) {
  if (!(max_area > 0.0)) throw std::invalid_argument("max_area must be positive");
  const int n = patch_points.size();
  if (n < 3) return std::nullopt;
  if (n <= 14) {
    int k = oracle_max_points(patch_points, max_area, std::nullopt);
    if (k < 3) return std::nullopt;
    ExhaustiveOracle oracle(patch_points);
    return oracle.min_area_solution(k, std::nullopt);
  }
  if (n <= 25) return max_points_under_area(patch_points, max_area, AreaVariant::Sweep);
  return greedy_hull_peel(patch_points, max_area);
}

std::optional<RegionSolution> solve_patched_heuristic(const PointSet& ps, double max_area,
                                                      double size, double step) {
  if (!(max_area > 0.0)) throw std::invalid_argument("max_area must be positive");
  return best_over_patches(ps, size, step,
                           [&](const PointSet& sub) { return hull_peel_heuristic(sub, max_area); });
}

}  // namespace kgon
