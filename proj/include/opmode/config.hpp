#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opmode/dataset.hpp"
#include "opmode/kinematics.hpp"
#include "opmode/microsim/calibration.hpp"
#include "opmode/microsim/idm.hpp"
#include "opmode/mnn.hpp"

namespace opmode::config {

/// A value from the TOML-style config: string, integer, float, bool or a
/// one-line array of those.
struct Value {
  using Scalar = std::variant<std::string, std::int64_t, double, bool>;
  std::variant<Scalar, std::vector<Scalar>> data;
  int line = 0;
};

/// [section] -> key -> value, as written.
using Document = std::map<std::string, std::map<std::string, Value>>;

/// Parses the subset used by pipeline configs: [sections], `key = value`,
/// double-quoted strings, numbers, true/false, single-line arrays and `#`
/// comments. Errors name the file and line.
Document parse_document(const std::string& text, const std::string& origin);

struct Paths {
  std::filesystem::path network;
  std::filesystem::path od;
  std::filesystem::path observed_counts;  // empty when not calibrating
  std::filesystem::path cycles;
  std::filesystem::path rate_table;
  std::filesystem::path vehicle_params;   // empty for the built-in defaults
  std::filesystem::path output_dir;
};

struct PipelineConfig {
  std::filesystem::path source;  // the config file itself
  Paths paths;
  std::vector<std::uint64_t> sim_seeds;
  long duration_s = 3600;
  long detector_window_s = 900;
  bool use_calibrated_od = false;
  microsim::IdmParams idm;
  microsim::CalibrationConfig calibration;
  double split_ratio = 0.8;
  std::uint64_t split_seed = 0;
  mnn::TrainConfig training;
  kinematics::BinningRules binning;
  dataset::FeatureSchema schema = dataset::FeatureSchema::default_schema();
  kinematics::VehicleParams vehicle;

  /// Simulation settings for one seed.
  microsim::SimConfig sim_config(std::uint64_t seed) const;
  /// Re-derives every seed from `master`, keeping the number of simulation seeds.
  void override_seeds(std::uint64_t master);
};

/// Reads and validates a config. Relative paths resolve against the config
/// file's directory; referenced input files must exist.
PipelineConfig load_config(const std::filesystem::path& path);
PipelineConfig parse_config(const std::string& text, const std::filesystem::path& source);

}  // namespace opmode::config
