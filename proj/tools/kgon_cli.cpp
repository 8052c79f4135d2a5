// kgon: command-line front end for the k-point minimum-area region solvers.
//
// Subcommands:
//   gen         synthesize a point set (uniform or gaussian) to CSV
//   summarize   dataset statistics (n, average nearest-neighbor distance)
//   solve       one instance, one algorithm -> JSON record
//   experiment  full matrix -> per-repetition CSV + aggregate CSV
//
// Exit codes: 0 success, 2 input/usage error, 3 no feasible region.

#include <kgon/area_diameter_solver.hpp>
#include <kgon/area_solver.hpp>
#include <kgon/data_pipeline.hpp>
#include <kgon/exhaustive_oracle.hpp>
#include <kgon/experiment.hpp>
#include <kgon/geometry.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNoSolution = 3;
constexpr int kSchemaVersion = 1;

using nlohmann::json;

// "a,b,c" or "lo:hi:step" (inclusive endpoints).
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    int lo = 0, hi = 0, step = 1;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi) || c1 != ':') throw CLI::ValidationError("bad range '" + text + "'");
    if (ss >> c2 >> step) {
      if (c2 != ':' || step <= 0) throw CLI::ValidationError("bad range '" + text + "'");
    }
    for (int v = lo; v <= hi; v += step) values.push_back(v);
    return values;
  }
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(std::stoi(item));
  return values;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(text);
    if (!(ss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0.0) {
      throw CLI::ValidationError("bad range '" + text + "'");
    }
    for (double v = lo; v <= hi + 1e-12; v += step) values.push_back(v);
    return values;
  }
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf") {
      values.push_back(std::numeric_limits<double>::infinity());
    } else {
      values.push_back(std::stod(item));
    }
  }
  return values;
}

json solution_to_json(const kgon::RegionSolution& sol) {
  json vertices = json::array();
  for (const kgon::Point& v : sol.polygon.vertices) {
    vertices.push_back({{"id", v.id}, {"x_mm", v.x()}, {"y_mm", v.y()}});
  }
  return json{{"vertices", vertices},
              {"cardinality", sol.cardinality},
              {"area", sol.area},
              {"diameter", sol.diameter},
              {"optimal", sol.optimal}};
}

void emit(const json& record, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << record.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
    out << record.dump(2) << '\n';
  }
}

struct SolveOptions {
  std::string input;
  std::string alg = "A-sweep";
  int k = -1;
  double area = std::numeric_limits<double>::quiet_NaN();
  double diameter = std::numeric_limits<double>::quiet_NaN();
  double patch_size = 3.0;
  double patch_step = 0.5;
  double px_per_mm = 0.0;
  double min_accuracy = 0.86;
  bool oracle = false;
  std::string out;
};

int cmd_solve(const SolveOptions& opt) {
  std::optional<kgon::Algorithm> alg = kgon::parse_algorithm(opt.alg);
  if (!alg) {
    std::cerr << "unknown algorithm '" << opt.alg << "'\n";
    return kExitInputError;
  }
  std::optional<int> k;
  if (opt.k >= 0) k = opt.k;
  std::optional<double> area;
  if (!std::isnan(opt.area)) area = opt.area;
  if (k.has_value() == area.has_value()) {
    std::cerr << "provide exactly one of --k and --area\n";
    return kExitInputError;
  }

  kgon::IngestConfig ingest;
  ingest.px_per_mm = opt.px_per_mm;
  ingest.min_accuracy = opt.min_accuracy;
  kgon::PointSet ps = kgon::load_points(opt.input, ingest);

  kgon::AlgorithmSpec spec{*alg, opt.diameter};
  kgon::SolveOutcome outcome =
      kgon::run_algorithm(ps, spec, k, area, opt.patch_size, opt.patch_step);

  json record{{"schema_version", kSchemaVersion},
              {"command", "solve"},
              {"algorithm", opt.alg},
              {"n", ps.size()},
              {"parameters",
               {{"k", k ? json(*k) : json(nullptr)},
                {"area", area ? json(*area) : json(nullptr)},
                {"diameter", std::isnan(opt.diameter) ? json(nullptr) : json(opt.diameter)},
                {"patch_size", opt.patch_size},
                {"step", opt.patch_step}}},
              {"wall_time_s", outcome.time_s},
              {"entries_created", outcome.entries},
              {"pairs_considered", outcome.pairs_considered},
              {"pairs_pruned", outcome.pairs_pruned}};
  record["solution"] = outcome.solution ? solution_to_json(*outcome.solution) : json(nullptr);

  if (opt.oracle) {
    std::optional<double> d;
    if (!std::isnan(opt.diameter)) d = opt.diameter;
    kgon::ExhaustiveOracle oracle(ps);
    bool match = false;
    if (k) {
      std::optional<double> ref = oracle.min_area(*k, d);
      match = ref.has_value() == outcome.solution.has_value() &&
              (!ref || std::abs(*ref - outcome.solution->area) <=
                           1e-9 * std::max(1.0, std::abs(*ref)));
      record["oracle"] = {{"min_area", ref ? json(*ref) : json(nullptr)}, {"match", match}};
    } else {
      int ref_k = oracle.max_count(*area, d);
      int got_k = outcome.solution ? outcome.solution->cardinality : 0;
      match = ref_k == got_k;
      record["oracle"] = {{"max_points", ref_k}, {"match", match}};
    }
    if (!match) {
      emit(record, opt.out);
      std::cerr << "oracle cross-check failed\n";
      return kExitInputError;
    }
  }

  emit(record, opt.out);
  return outcome.solution ? kExitOk : kExitNoSolution;
}

struct ExperimentOptions {
  std::string dist = "uniform";
  std::string ns = "100:200:10";
  std::string sigmas = "3.0";
  std::vector<std::string> algs;
  std::string diameters;
  int reps = 1;
  int k = -1;
  double area = std::numeric_limits<double>::quiet_NaN();
  double square = 20.0;
  double patch_size = 3.0;
  double patch_step = 0.5;
  std::uint64_t seed = 0;
  bool parallel = false;
  bool oracle = false;
  std::string out;
};

int cmd_experiment(const ExperimentOptions& opt) {
  kgon::ExperimentConfig config;
  if (opt.dist == "uniform") {
    config.distribution = kgon::GeneratorConfig::Kind::Uniform;
  } else if (opt.dist == "gaussian") {
    config.distribution = kgon::GeneratorConfig::Kind::Gaussian;
  } else {
    std::cerr << "unknown distribution '" << opt.dist << "'\n";
    return kExitInputError;
  }
  config.ns = parse_int_list(opt.ns);
  config.sigmas = parse_double_list(opt.sigmas);
  config.reps = opt.reps;
  config.base_seed = opt.seed;
  config.square = opt.square;
  config.patch_size = opt.patch_size;
  config.patch_step = opt.patch_step;
  config.parallel = opt.parallel;
  config.oracle_check = opt.oracle;
  if (opt.k >= 0) config.k = opt.k;
  if (!std::isnan(opt.area)) config.max_area = opt.area;

  std::vector<double> diameters =
      opt.diameters.empty() ? std::vector<double>{} : parse_double_list(opt.diameters);
  for (const std::string& name : opt.algs) {
    std::optional<kgon::Algorithm> alg = kgon::parse_algorithm(name);
    if (!alg) {
      std::cerr << "unknown algorithm '" << name << "'\n";
      return kExitInputError;
    }
    if (*alg == kgon::Algorithm::AD) {
      if (diameters.empty()) {
        std::cerr << "algorithm AD requires --diameter\n";
        return kExitInputError;
      }
      for (double d : diameters) config.algorithms.push_back({*alg, d});
    } else {
      config.algorithms.push_back({*alg, std::numeric_limits<double>::quiet_NaN()});
    }
  }

  std::vector<kgon::ExperimentRow> rows = kgon::run_experiment(config);
  std::vector<kgon::AggregateRow> aggregates = kgon::aggregate_means(rows);

  if (opt.out.empty()) {
    kgon::write_rows_csv(std::cout, rows);
  } else {
    std::ofstream rows_out(opt.out + "_rows.csv");
    std::ofstream agg_out(opt.out + "_agg.csv");
    if (!rows_out || !agg_out) {
      std::cerr << "cannot open output files with prefix '" << opt.out << "'\n";
      return kExitInputError;
    }
    kgon::write_rows_csv(rows_out, rows);
    kgon::write_aggregates_csv(agg_out, aggregates);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-area convex regions containing exactly k points"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic point set");
  kgon::GeneratorConfig gen_cfg;
  std::string gen_dist = "uniform";
  std::string gen_out;
  gen->add_option("--dist", gen_dist, "uniform|gaussian")->default_str("uniform");
  gen->add_option("--n", gen_cfg.n, "number of points")->required();
  gen->add_option("--square", gen_cfg.square, "square side, mm");
  gen->add_option("--sigma", gen_cfg.sigma, "gaussian std dev, mm");
  gen->add_option("--seed", gen_cfg.seed, "RNG seed");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // summarize
  auto* summ = app.add_subcommand("summarize", "dataset statistics");
  std::string summ_in, summ_out;
  double summ_px_per_mm = 0.0, summ_min_acc = 0.86;
  summ->add_option("--in", summ_in, "input CSV")->required();
  summ->add_option("--px-per-mm", summ_px_per_mm, "pixel-to-mm factor for raw detections");
  summ->add_option("--min-accuracy", summ_min_acc, "detection accuracy cutoff");
  summ->add_option("--out", summ_out, "output JSON path (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance");
  SolveOptions sopt;
  solve->add_option("--in", sopt.input, "input CSV")->required();
  solve->add_option("--alg", sopt.alg, "A-basic|A-sweep|AD|patched-A|heuristic|oracle");
  solve->add_option("--k", sopt.k, "exact cardinality target");
  solve->add_option("--area", sopt.area, "maximum area, mm^2");
  solve->add_option("--diameter", sopt.diameter, "maximum diameter, mm (AD / oracle)");
  solve->add_option("--patch-size", sopt.patch_size, "patch side, mm");
  solve->add_option("--step", sopt.patch_step, "patch shift, mm");
  solve->add_option("--px-per-mm", sopt.px_per_mm, "pixel-to-mm factor for raw detections");
  solve->add_option("--min-accuracy", sopt.min_accuracy, "detection accuracy cutoff");
  solve->add_flag("--oracle", sopt.oracle, "cross-check against the exhaustive oracle");
  solve->add_option("--out", sopt.out, "output JSON path (default stdout)");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run an experiment matrix");
  ExperimentOptions eopt;
  exp->add_option("--dist", eopt.dist, "uniform|gaussian");
  exp->add_option("--n", eopt.ns, "sizes: list a,b,c or range lo:hi:step");
  exp->add_option("--sigma", eopt.sigmas, "gaussian sigmas: list or range");
  exp->add_option("--alg", eopt.algs, "algorithms (repeatable)")->required();
  exp->add_option("--diameter", eopt.diameters, "diameters for AD: list or range");
  exp->add_option("--reps", eopt.reps, "repetitions per cell");
  exp->add_option("--k", eopt.k, "exact cardinality target");
  exp->add_option("--area", eopt.area, "maximum area, mm^2");
  exp->add_option("--square", eopt.square, "square side, mm");
  exp->add_option("--patch-size", eopt.patch_size, "patch side, mm");
  exp->add_option("--step", eopt.patch_step, "patch shift, mm");
  exp->add_option("--seed", eopt.seed, "base RNG seed");
  exp->add_flag("--parallel", eopt.parallel, "run repetitions in parallel");
  exp->add_flag("--oracle", eopt.oracle, "cross-check every row (small n only)");
  exp->add_option("--out", eopt.out, "output prefix (<prefix>_rows.csv, <prefix>_agg.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (gen->parsed()) {
      if (gen_dist == "uniform") {
        gen_cfg.kind = kgon::GeneratorConfig::Kind::Uniform;
      } else if (gen_dist == "gaussian") {
        gen_cfg.kind = kgon::GeneratorConfig::Kind::Gaussian;
      } else {
        std::cerr << "unknown distribution '" << gen_dist << "'\n";
        return kExitInputError;
      }
      kgon::PointSet ps = kgon::generate_points(gen_cfg);
      kgon::save_points(gen_out, ps);
      return kExitOk;
    }
    if (summ->parsed()) {
      kgon::IngestConfig ingest;
      ingest.px_per_mm = summ_px_per_mm;
      ingest.min_accuracy = summ_min_acc;
      kgon::PointSet ps = kgon::load_points(summ_in, ingest);
      kgon::DatasetSummary s = kgon::summarize(ps);
      emit(json{{"schema_version", kSchemaVersion},
                {"command", "summarize"},
                {"n", s.n},
                {"ann_mean_mm", s.ann_mean},
                {"ann_std_mm", s.ann_std}},
           summ_out);
      return kExitOk;
    }
    if (solve->parsed()) return cmd_solve(sopt);
    if (exp->parsed()) return cmd_experiment(eopt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
