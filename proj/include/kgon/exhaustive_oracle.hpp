#pragma once

#include <kgon/types.hpp>

#include <optional>
#include <vector>

namespace kgon {

// Brute-force reference: enumerate every convex-position subset (as the hull
// of every subset, deduplicated), measure it, and answer min-area / max-count
// queries from the enumeration. Intractable beyond small n by design.
class ExhaustiveOracle {
 public:
  static constexpr int kDefaultMaxPoints = 14;

  explicit ExhaustiveOracle(const PointSet& ps, int max_points = kDefaultMaxPoints);

  // Smallest area over regions containing exactly k points, optionally with
  // diameter <= max_diameter. nullopt if no such region exists.
  std::optional<double> min_area(int k, std::optional<double> max_diameter = {}) const;

  // As min_area, but also returns a witness region (ties resolved by fewer
  // vertices, then lexicographically smallest sorted id sequence).
  std::optional<RegionSolution> min_area_solution(int k,
                                                  std::optional<double> max_diameter = {}) const;

  // Largest k for which some region with area <= max_area (and diameter
  // bound, if given) exists; 0 if none.
  int max_count(double max_area, std::optional<double> max_diameter = {}) const;

  // Min area over regions with exactly k points whose diameter is attained by
  // the given pair of positions (and equals |pq| exactly, with p and q as
  // vertices). Used to cross-check single diametral-pair subproblems.
  std::optional<double> min_area_with_diametral_pair(int k, int p_pos, int q_pos) const;

 private:
  struct Candidate {
    std::vector<int> hull_positions;  // CCW, positions into ps
    int cardinality = 0;
    double area = 0.0;
    double diameter2 = 0.0;
  };

  const PointSet* ps_;
  std::vector<Candidate> candidates_;
};

// Convenience wrappers matching the module-level operations.
std::optional<double> oracle_min_area(const PointSet& ps, int k,
                                      std::optional<double> max_diameter = {},
                                      int max_points = ExhaustiveOracle::kDefaultMaxPoints);
int oracle_max_points(const PointSet& ps, double max_area,
                      std::optional<double> max_diameter = {},
                      int max_points = ExhaustiveOracle::kDefaultMaxPoints);

}  // namespace kgon
