#pragma once

#include <kgon/count_oracle.hpp>
#include <kgon/types.hpp>

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace kgon {

// One candidate diametral pair: p is the perturbed-lower endpoint, q the
// upper; lune holds the positions of every point within |pq| of both (always
// including p and q themselves).
struct DiameterPairTask {
  int p_pos = 0;
  int q_pos = 0;
  std::vector<int> lune;
  int lune_count = 0;
};

struct AdRunStats {
  double wall_time_s = 0.0;
  long long pairs_considered = 0;
  long long pairs_pruned = 0;
  long long entries_created = 0;
  // Per-k minima seen by the wrapper (partial below the winning cardinality).
  std::vector<double> min_area_by_k;
};

// All pairs with |pq| <= max_diameter, in decreasing lune-count order (ties by
// lower point id, then upper point id). Callers prune tasks whose lune cannot
// hold the cardinality still being sought.
std::vector<DiameterPairTask> pair_schedule(const PointSet& ps, double max_diameter);

// The per-pair DP: minimum area of a convex polygon with exactly k points,
// vertices inside the task's lune, p and q as vertices forming a diametral
// pair, and every antipodal pair at distance <= |pq|. Memoized top-down;
// reusable across k for the same task. Returns NaN when no polygon exists.
class PairSolver {
 public:
  PairSolver(const PointSet& ps, const CountOracle& oracle, const DiameterPairTask& task);

  double solve(int k);
  long long entries_created() const;

  // All CCW position sequences of polygons attaining `target` for k (cap'd).
  std::vector<std::vector<int>> reconstruct(int k, double target, int cap);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

double solve_pair(const PointSet& ps, const CountOracle& oracle, const DiameterPairTask& task,
                  int k, long long* entries_created = nullptr);

// Global minimum over all diametral-pair tasks. Throws std::invalid_argument
// for k out of [3, n] or D <= 0.
std::optional<RegionSolution> min_area_k_diameter(const PointSet& ps, int k, double max_diameter,
                                                  AdRunStats* stats = nullptr, bool prune = true);

// Doubling wrapper: maximum cardinality with area <= max_area and diameter <=
// max_diameter; the returned solution has minimum area for that cardinality.
std::optional<RegionSolution> max_points_under_area_diameter(const PointSet& ps, double max_area,
                                                             double max_diameter,
                                                             AdRunStats* stats = nullptr,
                                                             bool prune = true);

}  // namespace kgon
