#pragma once

#include <kgon/types.hpp>

#include <optional>
#include <vector>

namespace kgon {

// Overlapping axis-aligned square windows anchored at the bounding-box min
// corner, shifted by `step` along each axis. Membership is closed (points on
// the patch border belong to the patch).
struct Patch {
  double x0 = 0.0;
  double y0 = 0.0;
  std::vector<int> members;  // positions into the parent PointSet
};

struct PatchGrid {
  double patch_size = 3.0;
  double step = 0.5;
  std::vector<Patch> patches;
};

PatchGrid build_patches(const PointSet& ps, double size, double step);

// Exact A-algorithm run inside every patch; the best patch solution wins
// (more points first, then smaller area, then lower patch index). The result
// diameter is bounded by size * sqrt(2).
std::optional<RegionSolution> solve_patched_A(const PointSet& ps, double max_area,
                                              double size = 3.0, double step = 0.5);

// Hull peeling on one patch: repeatedly discard a hull vertex (or replace it
// by a point inside the triangle it spans with its neighbours) until the
// area is at most max_area. Small inputs are solved exactly instead: the
// subset-enumeration oracle up to 14 points, the exact A-solver up to 25.
std::optional<RegionSolution> hull_peel_heuristic(const PointSet& patch_points, double max_area);

// hull_peel_heuristic in every patch, best solution by the same tie rule as
// solve_patched_A.
std::optional<RegionSolution> solve_patched_heuristic(const PointSet& ps, double max_area,
                                                      double size = 3.0, double step = 0.5);

}  // namespace kgon
