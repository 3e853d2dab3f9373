#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opmode/config.hpp"

namespace opmode::pipeline {

enum class Stage { kCalibrateOd, kSimulate, kBuildDataset, kTrain, kPredict, kBaseline, kEmissions, kEvaluate };

std::string_view to_string(Stage s);  // the subcommand name, e.g. "build-dataset"
std::optional<Stage> parse_stage(std::string_view name);
/// Every stage in run order.
const std::vector<Stage>& all_stages();

/// Runs pipeline stages against one output directory. Each stage reads the
/// files of earlier stages, writes its own and a manifests/<stage>.json with
/// input and output SHA-256 hashes, seeds and the config hash.
class Pipeline {
 public:
  explicit Pipeline(config::PipelineConfig cfg, std::optional<std::uint64_t> seed_override = std::nullopt);

  /// Throws PrerequisiteError when an input produced by an earlier stage is missing.
  void run(Stage stage);
  /// All stages in order; calibrate-od only when observed counts are configured.
  void run_all();

  const config::PipelineConfig& config() const { return cfg_; }
  const std::filesystem::path& out_dir() const { return cfg_.paths.output_dir; }

  /// Progress messages; defaults to stderr.
  std::function<void(const std::string&)> log;

 private:
  void calibrate_od();
  void simulate();
  void build_dataset();
  void train();
  void predict();
  void baseline();
  void emissions();
  void evaluate();

  config::PipelineConfig cfg_;
  std::optional<std::uint64_t> seed_override_;
  std::string config_hash_;
};

}  // namespace opmode::pipeline
