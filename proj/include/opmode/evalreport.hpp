#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opmode/emissions.hpp"
#include "opmode/kinematics.hpp"
#include "opmode/mnn.hpp"

namespace opmode::evalreport {

using kinematics::kNumBins;
using kinematics::OpModeDistribution;
using emissions::kNumPollutants;

using BinValues = std::array<double, kNumBins>;
/// nullopt marks an undefined entry (zero-variance truth, zero true emissions).
using OptionalBinValues = std::array<std::optional<double>, kNumBins>;
using PollutantErrors = std::array<std::optional<double>, kNumPollutants>;

/// sqrt(mean over rows of squared error), per bin. Needs matching, non-empty inputs.
BinValues rmse_per_bin(std::span<const OpModeDistribution> pred, std::span<const OpModeDistribution> truth);

/// 1 - SSE / SST per bin; undefined where the truth column is constant. Needs N >= 2.
OptionalBinValues r2_per_bin(std::span<const OpModeDistribution> pred, std::span<const OpModeDistribution> truth);

/// 100 * |est - truth| / truth, undefined when truth is 0.
std::optional<double> percent_error(double estimate, double truth);
PollutantErrors pollutant_pct_error(const emissions::Grams& estimate, const emissions::Grams& truth);

/// Unweighted mean over the 23 bins.
double mean_rmse(const BinValues& rmse);

struct MethodOutput {
  std::vector<OpModeDistribution> predictions;  // aligned with the truth rows
  emissions::Grams grams{};                     // network total
};

struct ReportInputs {
  std::vector<OpModeDistribution> truth;
  emissions::Grams truth_grams{};
  MethodOutput mnn;
  MethodOutput baseline;
  std::vector<mnn::EpochLoss> history;  // may be empty
};

struct MethodMetrics {
  BinValues rmse{};
  OptionalBinValues r2{};
  PollutantErrors pct_error{};
  double mean_rmse = 0.0;
};

struct Report {
  std::size_t n_links = 0;
  MethodMetrics mnn;
  MethodMetrics baseline;

  /// Pollutants where the network's error is defined and no larger than the baseline's.
  std::size_t pollutants_won_by_mnn() const;
};

Report compute_report(const ReportInputs& in);

/// Writes metrics_bins.csv, metrics_pollutants.csv, summary.json and
/// plotdata/*.csv under `dir`. Output depends only on the inputs.
void write_report(const Report& report, const ReportInputs& in, const std::filesystem::path& dir);

}  // namespace opmode::evalreport
