#pragma once

#include <kgon/types.hpp>

#include <optional>
#include <vector>

namespace kgon {

// The area-only solver: minimum-area convex polygon containing exactly k
// points (vertices and interior), over all choices of bottommost vertex.
// Basic fills the fan DP table by direct minimization (O(n^4 k)); Sweep fills
// the same table with a rotational sweep around each head vertex (O(n^3 k));
// SweepCompressed is the sweep with run-length-compressed storage (identical
// values, fewer stored entries).
enum class AreaVariant { Basic, Sweep, SweepCompressed };

struct ARunStats {
  double wall_time_s = 0.0;
  long long entries_created = 0;
  // min_area_by_k[k] = smallest area of a region with exactly k points, NaN
  // where none exists. Under pruning (max_points_under_area) rows below the
  // final cardinality may be partial; rows >= the final cardinality are exact.
  std::vector<double> min_area_by_k;
};

// Candidate bottommost points in processing order (most points above first).
// A candidate p can only bottom a region with at most above+1 points, so the
// solvers skip p once above+1 < the cardinality still being sought.
struct BottomCandidate {
  int pos = 0;    // position into the PointSet
  int above = 0;  // points strictly above p in the perturbed y-order
};
std::vector<BottomCandidate> area_early_exit_order(const PointSet& ps);

// Minimum-area region with exactly k points. Throws std::invalid_argument for
// k < 3 or k > n. nullopt when no such region exists.
std::optional<RegionSolution> min_area_k(const PointSet& ps, int k,
                                         AreaVariant variant = AreaVariant::Sweep,
                                         ARunStats* stats = nullptr, bool prune = true);

inline std::optional<RegionSolution> min_area_k_basic(const PointSet& ps, int k,
                                                      ARunStats* stats = nullptr) {
  return min_area_k(ps, k, AreaVariant::Basic, stats);
}
inline std::optional<RegionSolution> min_area_k_sweep(const PointSet& ps, int k,
                                                      ARunStats* stats = nullptr) {
  return min_area_k(ps, k, AreaVariant::Sweep, stats);
}

// All co-optimal regions for k (up to max_solutions), sorted by the tie rule:
// fewer vertices first, then lexicographically smallest sorted vertex ids.
std::vector<RegionSolution> min_area_k_all(const PointSet& ps, int k,
                                           AreaVariant variant = AreaVariant::Sweep,
                                           int max_solutions = 256);

// Region with the most points among those of area <= max_area (no diameter
// bound). nullopt when even the best 3-point region exceeds max_area.
std::optional<RegionSolution> max_points_under_area(const PointSet& ps, double max_area,
                                                    AreaVariant variant = AreaVariant::Sweep,
                                                    ARunStats* stats = nullptr, bool prune = true);

}  // namespace kgon
