#pragma once

#include <kgon/types.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace kgon {

// Synthetic instance generation. Coordinates are in millimetres inside the
// square [0, square]^2. Gaussian draws are centred in the square and
// re-drawn until they land inside it; exact coordinate duplicates are
// re-drawn as well, so the result is always a valid PointSet.
struct GeneratorConfig {
  enum class Kind { Uniform, Gaussian };
  Kind kind = Kind::Uniform;
  int n = 0;
  double square = 20.0;  // side length, mm
  double sigma = 3.0;    // Gaussian only, mm
  std::uint64_t seed = 0;
};

PointSet generate_points(const GeneratorConfig& config);

// CSV ingestion. Two header layouts are recognized:
//   x_mm,y_mm              -- coordinates already in millimetres
//   x_px,y_px,accuracy     -- pixel coordinates with a per-point detection
//                             score; rows with accuracy below min_accuracy
//                             are dropped, survivors are divided by px_per_mm
// Parse failures report the 1-based line number. px_per_mm must be positive
// when the pixel layout is used.
struct IngestConfig {
  double min_accuracy = 0.86;
  double px_per_mm = 0.0;  // required for the pixel layout
};

PointSet load_points(const std::string& path, const IngestConfig& config = {});
PointSet load_points(std::istream& in, const IngestConfig& config = {});

// Writes the x_mm,y_mm layout.
void save_points(const std::string& path, const PointSet& ps);

// Average nearest-neighbour distance and its (population) standard deviation.
// Requires at least two points.
struct DatasetSummary {
  int n = 0;
  double ann_mean = 0.0;
  double ann_std = 0.0;
};

DatasetSummary summarize(const PointSet& ps);

}  // namespace kgon
