#pragma once

#include <kgon/predicates.hpp>
#include <kgon/types.hpp>

#include <optional>
#include <vector>

namespace kgon {

// Unsigned area of triangle abc.
double triangle_area(const Point& a, const Point& b, const Point& c);

// Shoelace area; positive for counterclockwise polygons. Degenerate -> 0.
double polygon_area(const ConvexPolygon& poly);

// Andrew's monotone chain with exact orientation. Vertices are returned in
// counterclockwise order; collinear boundary points are not vertices. An
// all-collinear input yields the two extreme points (degenerate).
ConvexPolygon convex_hull(const PointSet& ps);
ConvexPolygon convex_hull(const std::vector<Point>& pts);

// All vertex pairs admitting parallel supporting lines, via rotating
// calipers. Degenerate two-vertex polygons yield the single pair {0,1}.
std::vector<AntipodalPair> antipodal_pairs(const ConvexPolygon& poly);

// Max pairwise vertex distance together with a realizing antipodal pair.
struct Diameter {
  double value = 0.0;
  AntipodalPair pair;
};
Diameter polygon_diameter(const ConvexPolygon& poly);

// Points of `ps` within |pq| of both p and q (closed disks). p and q are
// given by position in `ps`; the result keeps original ids.
PointSet lune_filter(const PointSet& ps, int p_pos, int q_pos);
std::vector<int> lune_positions(const PointSet& ps, int p_pos, int q_pos);

// Closed containment: boundary (including vertices) counts as inside.
bool contains_closed(const ConvexPolygon& poly, const Point& pt);

// Containment consistent with the symbolically perturbed geometry used by all
// solvers: vertices count, otherwise strictly inside under orient_sos.
bool contains_consistent(const ConvexPolygon& poly, const Point& pt);

// Number of points of `ps` contained in `poly` under the perturbed
// convention. This is the recount against which solver cardinalities are
// validated.
int region_cardinality(const ConvexPolygon& poly, const PointSet& ps);

// Assemble a RegionSolution from counterclockwise vertex positions into `ps`.
RegionSolution make_region_solution(const PointSet& ps, const std::vector<int>& ccw_positions,
                                    bool optimal);

}  // namespace kgon
