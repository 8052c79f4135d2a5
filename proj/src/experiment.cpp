#include <kgon/experiment.hpp>

#include <kgon/area_diameter_solver.hpp>
#include <kgon/area_solver.hpp>
#include <kgon/exhaustive_oracle.hpp>
#include <kgon/heuristics.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <mutex>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace kgon {

namespace {

double now_minus(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void format_number(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
  } else if (std::isinf(v)) {
    out << (v > 0 ? "inf" : "-inf");
  } else {
    out << v;
  }
}

std::string cell_distribution_name(GeneratorConfig::Kind kind) {
  return kind == GeneratorConfig::Kind::Uniform ? "uniform" : "gaussian";
}

}  // namespace

const char* algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::ABasic:
      return "A-basic";
    case Algorithm::ASweep:
      return "A-sweep";
    case Algorithm::AD:
      return "AD";
    case Algorithm::PatchedA:
      return "patched-A";
    case Algorithm::Heuristic:
      return "heuristic";
    case Algorithm::OracleRef:
      return "oracle";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "A-basic") return Algorithm::ABasic;
  if (name == "A-sweep") return Algorithm::ASweep;
  if (name == "AD") return Algorithm::AD;
  if (name == "patched-A") return Algorithm::PatchedA;
  if (name == "heuristic") return Algorithm::Heuristic;
  if (name == "oracle") return Algorithm::OracleRef;
  return std::nullopt;
}

SolveOutcome run_algorithm(const PointSet& ps, const AlgorithmSpec& spec, std::optional<int> k,
                           std::optional<double> max_area, double patch_size, double patch_step) {
  const bool has_k = k.has_value();
  const bool has_area = max_area.has_value();
  if (!has_k && !has_area) throw std::invalid_argument("provide k or a maximum area");
  if (has_k && has_area && spec.alg != Algorithm::OracleRef) {
    throw std::invalid_argument("k and a maximum area are mutually exclusive");
  }

  SolveOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  switch (spec.alg) {
    case Algorithm::ABasic:
    case Algorithm::ASweep: {
      ARunStats stats;
      AreaVariant variant =
          spec.alg == Algorithm::ABasic ? AreaVariant::Basic : AreaVariant::Sweep;
      out.solution = has_k ? min_area_k(ps, *k, variant, &stats)
                           : max_points_under_area(ps, *max_area, variant, &stats);
      out.entries = stats.entries_created;
      break;
    }
    case Algorithm::AD: {
      if (std::isnan(spec.diameter)) throw std::invalid_argument("AD requires a diameter bound");
      AdRunStats stats;
      out.solution = has_k ? min_area_k_diameter(ps, *k, spec.diameter, &stats)
                           : max_points_under_area_diameter(ps, *max_area, spec.diameter, &stats);
      out.entries = stats.entries_created;
      out.pairs_considered = stats.pairs_considered;
      out.pairs_pruned = stats.pairs_pruned;
      break;
    }
    case Algorithm::PatchedA: {
      if (!has_area) throw std::invalid_argument("patched-A requires a maximum area");
      out.solution = solve_patched_A(ps, *max_area, patch_size, patch_step);
      break;
    }
    case Algorithm::Heuristic: {
      if (!has_area) throw std::invalid_argument("heuristic requires a maximum area");
      out.solution = solve_patched_heuristic(ps, *max_area, patch_size, patch_step);
      break;
    }
    case Algorithm::OracleRef: {
      std::optional<double> d;
      if (!std::isnan(spec.diameter)) d = spec.diameter;
      ExhaustiveOracle oracle(ps);
      if (has_k) {
        out.solution = oracle.min_area_solution(*k, d);
      } else {
        int best_k = oracle.max_count(*max_area, d);
        if (best_k >= 3) out.solution = oracle.min_area_solution(best_k, d);
      }
      break;
    }
  }
  out.time_s = now_minus(t0);
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t rep) {
  // splitmix64 over a mixed key; any fixed bijective mixer works, this one is
  // the standard reference implementation.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (cell * 0x100000001ULL + rep + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  if (config.reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (config.ns.empty()) throw std::invalid_argument("experiment matrix lists no sizes");
  if (config.algorithms.empty()) throw std::invalid_argument("experiment matrix lists no algorithms");
  if (!config.k && !config.max_area) throw std::invalid_argument("provide k or a maximum area");

  struct Cell {
    int n;
    double sigma;
    std::uint64_t index;
  };
  std::vector<Cell> cells;
  const std::vector<double>& sigmas =
      config.distribution == GeneratorConfig::Kind::Gaussian ? config.sigmas
                                                             : std::vector<double>{0.0};
  for (int n : config.ns) {
    for (double sigma : sigmas) {
      cells.push_back({n, sigma, static_cast<std::uint64_t>(cells.size())});
    }
  }

  const std::string dist_name = cell_distribution_name(config.distribution);
  std::vector<ExperimentRow> rows(cells.size() * static_cast<std::size_t>(config.reps) *
                                  config.algorithms.size());

  auto run_rep = [&](std::size_t cell_idx, int rep) {
    const Cell& cell = cells[cell_idx];
    GeneratorConfig gen;
    gen.kind = config.distribution;
    gen.n = cell.n;
    gen.square = config.square;
    gen.sigma = cell.sigma;
    gen.seed = derive_seed(config.base_seed, cell.index, static_cast<std::uint64_t>(rep));
    PointSet ps = generate_points(gen);

    for (std::size_t ai = 0; ai < config.algorithms.size(); ++ai) {
      const AlgorithmSpec& spec = config.algorithms[ai];
      SolveOutcome outcome = run_algorithm(ps, spec, config.k, config.max_area, config.patch_size,
                                           config.patch_step);
      ExperimentRow row;
      row.distribution = dist_name;
      row.n = cell.n;
      row.sigma = cell.sigma;
      row.rep = rep;
      row.seed = gen.seed;
      row.algorithm = algorithm_name(spec.alg);
      row.D = spec.diameter;
      if (outcome.solution) {
        row.k = outcome.solution->cardinality;
        row.area = outcome.solution->area;
        row.diameter = outcome.solution->diameter;
      }
      row.time_s = outcome.time_s;
      row.entries = outcome.entries;
      row.pairs_pruned = outcome.pairs_pruned;

      if (config.oracle_check) {
        std::optional<double> d;
        if (!std::isnan(spec.diameter)) d = spec.diameter;
        ExhaustiveOracle oracle(ps);
        if (config.k) {
          std::optional<double> ref = oracle.min_area(*config.k, d);
          bool ref_has = ref.has_value(), got_has = outcome.solution.has_value();
          double scale = ref_has ? std::max(1.0, std::abs(*ref)) : 1.0;
          if (ref_has != got_has ||
              (ref_has && std::abs(*ref - row.area) > 1e-9 * scale)) {
            throw std::runtime_error("oracle mismatch (min_area_k) at seed " +
                                     std::to_string(gen.seed));
          }
        } else {
          int ref_k = oracle.max_count(*config.max_area, d);
          if (ref_k != row.k) {
            throw std::runtime_error("oracle mismatch (max_points) at seed " +
                                     std::to_string(gen.seed));
          }
        }
      }

      rows[(cell_idx * static_cast<std::size_t>(config.reps) + static_cast<std::size_t>(rep)) *
               config.algorithms.size() +
           ai] = std::move(row);
    }
  };

  if (config.parallel && config.reps > 1) {
    for (std::size_t cell_idx = 0; cell_idx < cells.size(); ++cell_idx) {
      unsigned workers = std::max(1u, std::thread::hardware_concurrency());
      std::vector<std::thread> pool;
      std::exception_ptr error;
      std::mutex error_mutex;
      std::atomic<int> next{0};
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (;;) {
            int rep = next.fetch_add(1);
            if (rep >= config.reps) return;
            try {
              run_rep(cell_idx, rep);
            } catch (...) {
              std::lock_guard<std::mutex> lock(error_mutex);
              if (!error) error = std::current_exception();
              return;
            }
          }
        });
      }
      for (std::thread& t : pool) t.join();
      if (error) std::rethrow_exception(error);
    }
  } else {
    for (std::size_t cell_idx = 0; cell_idx < cells.size(); ++cell_idx) {
      for (int rep = 0; rep < config.reps; ++rep) run_rep(cell_idx, rep);
    }
  }
  return rows;
}

std::vector<AggregateRow> aggregate_means(const std::vector<ExperimentRow>& rows) {
  struct Acc {
    AggregateRow agg;
    std::size_t order = 0;
  };
  // Key D through its bit pattern so NaN (no bound) groups correctly.
  using Key = std::tuple<std::string, int, double, std::string, std::uint64_t>;
  std::map<Key, Acc> groups;
  std::size_t order = 0;
  for (const ExperimentRow& row : rows) {
    std::uint64_t dbits;
    static_assert(sizeof(dbits) == sizeof(row.D));
    std::memcpy(&dbits, &row.D, sizeof(dbits));
    Key key{row.distribution, row.n, row.sigma, row.algorithm, dbits};
    auto [it, inserted] = groups.try_emplace(key);
    Acc& acc = it->second;
    if (inserted) {
      acc.order = order++;
      acc.agg.distribution = row.distribution;
      acc.agg.n = row.n;
      acc.agg.sigma = row.sigma;
      acc.agg.algorithm = row.algorithm;
      acc.agg.D = row.D;
    }
    acc.agg.reps += 1;
    acc.agg.time_mean += row.time_s;
    acc.agg.entries_mean += static_cast<double>(row.entries);
    acc.agg.pairs_pruned_mean += static_cast<double>(row.pairs_pruned);
    if (row.k > 0) {
      acc.agg.solved += 1;
      acc.agg.k_mean += row.k;
      acc.agg.area_mean += row.area;
      acc.agg.diameter_mean += row.diameter;
    }
  }

  std::vector<const Acc*> ordered;
  ordered.reserve(groups.size());
  for (const auto& [key, acc] : groups) ordered.push_back(&acc);
  std::sort(ordered.begin(), ordered.end(),
            [](const Acc* a, const Acc* b) { return a->order < b->order; });

  std::vector<AggregateRow> result;
  result.reserve(ordered.size());
  for (const Acc* acc : ordered) {
    AggregateRow agg = acc->agg;
    double reps = static_cast<double>(agg.reps);
    agg.time_mean /= reps;
    agg.entries_mean /= reps;
    agg.pairs_pruned_mean /= reps;
    if (agg.solved > 0) {
      agg.k_mean /= agg.solved;
      agg.area_mean /= agg.solved;
      agg.diameter_mean /= agg.solved;
    } else {
      agg.k_mean = agg.area_mean = agg.diameter_mean =
          std::numeric_limits<double>::quiet_NaN();
    }
    result.push_back(std::move(agg));
  }
  return result;
}

void write_rows_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "distribution,n,sigma,rep,seed,algorithm,D,k,area,diameter,time_s,entries,pairs_pruned\n";
  out.precision(17);
  for (const ExperimentRow& row : rows) {
    out << row.distribution << ',' << row.n << ',' << row.sigma << ',' << row.rep << ','
        << row.seed << ',' << row.algorithm << ',';
    format_number(out, row.D);
    out << ',' << row.k << ',';
    format_number(out, row.area);
    out << ',';
    format_number(out, row.diameter);
    out << ',' << row.time_s << ',' << row.entries << ',' << row.pairs_pruned << '\n';
  }
}

void write_aggregates_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "distribution,n,sigma,algorithm,D,reps,solved,k_mean,area_mean,diameter_mean,"
         "time_mean,entries_mean,pairs_pruned_mean\n";
  out.precision(17);
  for (const AggregateRow& row : rows) {
    out << row.distribution << ',' << row.n << ',' << row.sigma << ',' << row.algorithm << ',';
    format_number(out, row.D);
    out << ',' << row.reps << ',' << row.solved << ',';
    format_number(out, row.k_mean);
    out << ',';
    format_number(out, row.area_mean);
    out << ',';
    format_number(out, row.diameter_mean);
    out << ',' << row.time_mean << ',' << row.entries_mean << ',' << row.pairs_pruned_mean
        << '\n';
  }
}

}  // namespace kgon
