#pragma once

#include <kgon/types.hpp>

#include <cstdint>
#include <vector>

namespace kgon {

// Constant-time triangle point counts via precomputed "strictly below the
// segment" counts for every point pair. Built in O(n^2 log n): one slope-
// sorted Fenwick sweep per anchor point. All strictness is resolved by the
// symbolic perturbation, so counts behave as if the input were in general
// position.
class CountOracle {
 public:
  explicit CountOracle(const PointSet& ps);

  // Points strictly below the open vertical strip of segment (a_pos, b_pos):
  // x strictly between (perturbed order), strictly under the segment's line.
  int below(int a_pos, int b_pos) const;

  // Points strictly inside triangle (a_pos, b_pos, c_pos) under the perturbed
  // geometry; the three corners are not counted.
  int triangle_count(int a_pos, int b_pos, int c_pos) const;

  int size() const { return n_; }

 private:
  std::size_t pair_index(int a, int b) const;

  int n_ = 0;
  const PointSet* ps_ = nullptr;
  std::vector<int> x_rank_;             // perturbed x-rank per position
  std::vector<std::int32_t> below_;     // n*(n-1)/2 pair table
};

}  // namespace kgon
