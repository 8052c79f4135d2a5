#pragma once

#include <kgon/data_pipeline.hpp>
#include <kgon/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace kgon {

enum class Algorithm { ABasic, ASweep, AD, PatchedA, Heuristic, OracleRef };

const char* algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(const std::string& name);

// One algorithm column of the experiment matrix. `diameter` applies to AD
// (NaN means unbounded / not applicable).
struct AlgorithmSpec {
  Algorithm alg = Algorithm::ASweep;
  double diameter = std::numeric_limits<double>::quiet_NaN();
};

// Uniform dispatch used by both the experiment runner and the solve command.
// Exactly one of `k` / `max_area` must be set (both allowed only for the
// oracle, which checks consistency). Timing covers the solver call including
// its preprocessing; input generation and I/O are outside.
struct SolveOutcome {
  std::optional<RegionSolution> solution;
  double time_s = 0.0;
  long long entries = 0;
  long long pairs_considered = 0;
  long long pairs_pruned = 0;
};

SolveOutcome run_algorithm(const PointSet& ps, const AlgorithmSpec& spec, std::optional<int> k,
                           std::optional<double> max_area, double patch_size = 3.0,
                           double patch_step = 0.5);

struct ExperimentConfig {
  GeneratorConfig::Kind distribution = GeneratorConfig::Kind::Uniform;
  std::vector<int> ns;
  std::vector<double> sigmas{0.0};  // gaussian only; keep {0.0} for uniform
  int reps = 1;
  std::uint64_t base_seed = 0;
  double square = 20.0;
  std::vector<AlgorithmSpec> algorithms;
  std::optional<int> k;
  std::optional<double> max_area;
  double patch_size = 3.0;
  double patch_step = 0.5;
  bool parallel = false;      // parallelizes repetitions only
  bool oracle_check = false;  // cross-check every row (n must stay <= 14)
};

// One CSV row per (setting, repetition, algorithm). For unsolved instances
// k = 0 and area/diameter are NaN.
struct ExperimentRow {
  std::string distribution;
  int n = 0;
  double sigma = 0.0;
  int rep = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  double D = std::numeric_limits<double>::quiet_NaN();
  int k = 0;
  double area = std::numeric_limits<double>::quiet_NaN();
  double diameter = std::numeric_limits<double>::quiet_NaN();
  double time_s = 0.0;
  long long entries = 0;
  long long pairs_pruned = 0;
};

// Per-cell means over solved repetitions.
struct AggregateRow {
  std::string distribution;
  int n = 0;
  double sigma = 0.0;
  std::string algorithm;
  double D = std::numeric_limits<double>::quiet_NaN();
  int reps = 0;
  int solved = 0;
  double k_mean = 0.0;
  double area_mean = 0.0;
  double diameter_mean = 0.0;
  double time_mean = 0.0;
  double entries_mean = 0.0;
  double pairs_pruned_mean = 0.0;
};

// The point set of a given matrix cell and repetition; the seed depends only
// on (distribution, n, sigma, rep) so every algorithm sees the same instance.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t rep);

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);
std::vector<AggregateRow> aggregate_means(const std::vector<ExperimentRow>& rows);

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_aggregates_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

}  // namespace kgon
