#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "opmode/kinematics.hpp"

namespace opmode::baseline {

using kinematics::OpModeDistribution;

/// A 1 Hz speed trace.
struct DriveCycle {
  std::string name;
  std::vector<double> speeds_mph;

  double avg_speed() const;
  /// At least 60 samples, all finite and >= 0.
  void validate() const;
};

/// Cycles ordered by average speed.
class CycleLibrary {
 public:
  /// Sorts by average speed. A cycle whose average speed equals an earlier
  /// one's is dropped. Throws ValidationError on duplicate names, invalid
  /// cycles or fewer than two distinct speeds.
  static CycleLibrary build(std::vector<DriveCycle> cycles);

  const std::vector<DriveCycle>& cycles() const { return cycles_; }
  const std::vector<std::string>& dropped() const { return dropped_; }

 private:
  std::vector<DriveCycle> cycles_;
  std::vector<std::string> dropped_;
};

DriveCycle parse_cycle_csv(const std::string& text, const std::string& name);
std::string format_cycle_csv(const DriveCycle& cycle);
/// Manifest JSON: {"cycles": [{"name": ..., "file": ...}, ...]}, files relative to the manifest.
CycleLibrary load_cycle_library(const std::filesystem::path& manifest);
std::string format_cycle_manifest(const std::vector<DriveCycle>& cycles);

/// Accelerations by first difference (0 for the first second), then binned.
/// Throws ValidationError for fewer than 3 samples.
OpModeDistribution cycle_opmode_distribution(const DriveCycle& cycle, const kinematics::VehicleParams& params,
                                             const kinematics::BinningRules& rules = {});

struct CycleSelection {
  std::size_t lower = 0;  // indices into the library
  std::size_t upper = 0;
  double weight = 0.0;    // share of `upper`
};

/// Bracketing cycles for a link speed. Outside the library range both ends
/// are the nearest cycle and the weight is 0.
CycleSelection select_cycles(const CycleLibrary& lib, double link_avg_speed);

/// (1 - w) * lower + w * upper.
OpModeDistribution interpolate_distribution(const OpModeDistribution& lower, const OpModeDistribution& upper,
                                            double weight);

/// Library with every cycle's distribution computed once.
class DriveCycleBaseline {
 public:
  DriveCycleBaseline(CycleLibrary lib, const kinematics::VehicleParams& params,
                     const kinematics::BinningRules& rules = {});

  OpModeDistribution predict(double link_avg_speed) const;
  const CycleLibrary& library() const { return lib_; }
  const std::vector<OpModeDistribution>& cycle_distributions() const { return dists_; }

 private:
  CycleLibrary lib_;
  std::vector<OpModeDistribution> dists_;
};

}  // namespace opmode::baseline
