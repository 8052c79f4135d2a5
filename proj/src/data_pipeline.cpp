#include <kgon/data_pipeline.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace kgon {

namespace {

// Uniform in [0, 1) from the top 53 bits; (0, 1] variant for the Box-Muller
// logarithm, which must not see zero.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
double uniform01_open0(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_field(const std::string& field, int line_no, const char* what) {
  try {
    std::size_t consumed = 0;
    double v = std::stod(field, &consumed);
    if (consumed != field.size()) throw std::invalid_argument("trailing characters");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": cannot parse " + what +
                                " '" + field + "'");
  }
}

}  // namespace

PointSet generate_points(const GeneratorConfig& config) {
  if (config.n < 0) throw std::invalid_argument("point count must be non-negative");
  if (!(config.square > 0.0)) throw std::invalid_argument("square side must be positive");
  if (config.kind == GeneratorConfig::Kind::Gaussian && !(config.sigma > 0.0)) {
    throw std::invalid_argument("sigma must be positive");
  }

  std::mt19937_64 rng(config.seed);
  const double side = config.square;
  const double cx = side / 2.0, cy = side / 2.0;

  std::vector<Eigen::Vector2d> coords;
  coords.reserve(static_cast<std::size_t>(config.n));
  std::set<std::pair<double, double>> seen;

  auto draw = [&]() -> Eigen::Vector2d {
    if (config.kind == GeneratorConfig::Kind::Uniform) {
      return {uniform01(rng) * side, uniform01(rng) * side};
    }
    // Box-Muller pair, rejected until it falls inside the square.
    for (;;) {
      double u1 = uniform01_open0(rng);
      double u2 = uniform01(rng);
      double r = std::sqrt(-2.0 * std::log(u1));
      double x = cx + config.sigma * r * std::cos(2.0 * M_PI * u2);
      double y = cy + config.sigma * r * std::sin(2.0 * M_PI * u2);
      if (x >= 0.0 && x <= side && y >= 0.0 && y <= side) return {x, y};
    }
  };

  while (static_cast<int>(coords.size()) < config.n) {
    Eigen::Vector2d c = draw();
    if (!seen.emplace(c.x(), c.y()).second) continue;  // exact duplicate, redraw
    coords.push_back(c);
  }
  return PointSet::from_coordinates(coords);
}

PointSet load_points(std::istream& in, const IngestConfig& config) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty input: missing header");

  std::vector<std::string> header = split_csv(line);
  bool pixel_layout = false;
  if (header.size() == 2 && header[0] == "x_mm" && header[1] == "y_mm") {
    pixel_layout = false;
  } else if (header.size() == 3 && header[0] == "x_px" && header[1] == "y_px" &&
             header[2] == "accuracy") {
    pixel_layout = true;
    if (!(config.px_per_mm > 0.0)) {
      throw std::invalid_argument("pixel input requires a positive px_per_mm");
    }
  } else {
    throw std::invalid_argument("line 1: unrecognized header '" + trim(line) +
                                "' (expected 'x_mm,y_mm' or 'x_px,y_px,accuracy')");
  }

  std::vector<Eigen::Vector2d> coords;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv(line);
    const std::size_t expected = pixel_layout ? 3 : 2;
    if (fields.size() != expected) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(expected) + " fields, got " +
                                  std::to_string(fields.size()));
    }
    double x = parse_field(fields[0], line_no, "x");
    double y = parse_field(fields[1], line_no, "y");
    if (pixel_layout) {
      double acc = parse_field(fields[2], line_no, "accuracy");
      if (acc < config.min_accuracy) continue;
      x /= config.px_per_mm;
      y /= config.px_per_mm;
    }
    coords.emplace_back(x, y);
  }
  try {
    return PointSet::from_coordinates(coords);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("after filtering: ") + e.what());
  }
}

PointSet load_points(const std::string& path, const IngestConfig& config) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return load_points(in, config);
}

void save_points(const std::string& path, const PointSet& ps) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << "x_mm,y_mm\n";
  out.precision(17);
  for (const Point& p : ps) out << p.x() << ',' << p.y() << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

DatasetSummary summarize(const PointSet& ps) {
  const int n = ps.size();
  if (n < 2) throw std::invalid_argument("summary requires at least two points");
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      best = std::min(best, squared_distance(ps[i], ps[j]));
    }
    double d = std::sqrt(best);
    sum += d;
    sum2 += d * d;
  }
  DatasetSummary s;
  s.n = n;
  s.ann_mean = sum / n;
  s.ann_std = std::sqrt(std::max(0.0, sum2 / n - s.ann_mean * s.ann_mean));
  return s;
}

}  // namespace kgon
