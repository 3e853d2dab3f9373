#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opmode/kinematics.hpp"
#include "opmode/microsim/network.hpp"
#include "opmode/microsim/traffic_data.hpp"

namespace opmode::dataset {

/// Raw model inputs for one link and detector window, before encoding.
struct RawFeatures {
  double avg_speed_mph = 0.0;
  double volume_vph = 0.0;
  double free_flow_speed_mph = 0.0;
  double speed_limit_mph = 0.0;
  double length_mi = 0.0;
  double lanes = 0.0;
  std::string road_class;
  std::string control;
  std::string priority;

  /// Value of a numeric feature by schema name; throws ValidationError for an unknown name.
  double numeric(std::string_view name) const;
  const std::string& label(std::string_view name) const;
};

struct CategoricalFeature {
  std::string name;
  std::vector<std::string> vocabulary;
};

/// Ordered numeric features followed by one-hot categorical blocks.
struct FeatureSchema {
  std::vector<std::string> numeric;
  std::vector<CategoricalFeature> categorical;

  static FeatureSchema default_schema();
  static const std::vector<std::string>& numeric_names();      // every selectable numeric feature
  static const std::vector<std::string>& categorical_names();  // every selectable categorical feature

  /// Schema restricted to the named features, in the canonical order.
  static FeatureSchema select(const std::vector<std::string>& numeric,
                              const std::vector<std::string>& categorical);

  std::size_t dimension() const;
  /// Column names of the encoded vector, e.g. "road_class=collector".
  std::vector<std::string> column_names() const;
  /// SHA-256 of the column names; identifies the encoded layout.
  std::string hash() const;
  void validate() const;
};

/// Per-column standardisation fitted on encoded training rows.
struct Scaler {
  std::vector<double> mean;
  std::vector<double> std;
  std::string schema_hash;

  void apply(std::span<double> row) const;
};

struct Sample {
  std::string link_id;
  RawFeatures features;
  kinematics::OpModeDistribution target;
};

/// Link activity actually observed in the window, kept beside the dataset
/// for ground-truth emissions.
struct SampleActivity {
  std::string row_id;  // s<seed>/w<window_start>/<link_id>
  std::string link_id;
  double vehicle_hours = 0.0;
};

struct Dataset {
  std::vector<Sample> samples;
  std::vector<SampleActivity> activity;  // parallel to samples
};

/// Inputs of `link` for one detector window. Returns nullopt when the window
/// counted no vehicles, since its average speed is undefined.
/// Throws ValidationError when the record belongs to another link.
std::optional<RawFeatures> extract_features(const microsim::Link& link, const microsim::DetectorRecord& det);

struct BuildStats {
  std::size_t rows = 0;
  std::size_t excluded_zero_count = 0;
};

/// Appends one sample per (link, detector window) of a simulation run. Targets
/// are the distributions of the link's vehicle-seconds in the window, with
/// braking history taken from each vehicle's whole trajectory.
BuildStats append_samples(Dataset& out, const microsim::Network& net,
                          std::span<const microsim::DetectorRecord> detectors,
                          std::span<const kinematics::TrajectoryPoint> trajectories, std::uint64_t seed,
                          const kinematics::VehicleParams& params, const kinematics::BinningRules& rules = {});

/// Unscaled encoding: numeric values, then one 0/1 block per categorical feature.
/// Throws ValidationError for a label outside the vocabulary, listing it.
std::vector<double> encode_raw(const RawFeatures& row, const FeatureSchema& schema);
std::vector<double> encode(const RawFeatures& row, const FeatureSchema& schema, const Scaler& scaler);
/// Label whose one-hot column is largest within `block`.
const std::string& decode_category(std::span<const double> block, const CategoricalFeature& feature);

/// Population mean and standard deviation per column; constant columns get std 1.
/// Throws ValidationError for fewer than 2 rows.
Scaler fit_scaler(const std::vector<std::vector<double>>& encoded_rows, std::string schema_hash);

struct Split {
  std::vector<std::size_t> train;  // ascending row indices
  std::vector<std::size_t> test;
};

/// Seeded shuffle of row indices; |train| = round(ratio * n). Needs n >= 5.
Split split(std::size_t n, double ratio, std::uint64_t seed);

/// Positions 0..n-1 shuffled by (seed, epoch) and cut into batches; the last may be short.
std::vector<std::vector<std::size_t>> batches(std::size_t n, std::size_t batch_size, std::uint64_t seed,
                                              std::uint64_t epoch);

std::string format_dataset_csv(const Dataset& ds);
std::string format_activity_csv(const Dataset& ds);
/// Reads dataset.csv and its activity side file; rows must line up.
Dataset read_dataset(const std::filesystem::path& dataset_csv, const std::filesystem::path& activity_csv);
Dataset parse_dataset(const std::string& dataset_text, const std::string& activity_text);

std::string format_scaler_json(const Scaler& scaler);
Scaler parse_scaler_json(const std::string& text, const std::string& origin);

}  // namespace opmode::dataset
