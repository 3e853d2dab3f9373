#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opmode/kinematics.hpp"

namespace opmode::emissions {

using kinematics::kNumBins;
using kinematics::OpModeBin;
using kinematics::OpModeDistribution;

enum class Pollutant { kHC, kCO, kNOx, kNO, kCO2, kPM25 };
inline constexpr std::size_t kNumPollutants = 6;
inline constexpr std::array<Pollutant, kNumPollutants> kPollutants = {
    Pollutant::kHC, Pollutant::kCO, Pollutant::kNOx, Pollutant::kNO, Pollutant::kCO2, Pollutant::kPM25};

std::string_view to_string(Pollutant p);  // HC, CO, NOx, NO, CO2, PM2_5
Pollutant parse_pollutant(std::string_view s);

using Grams = std::array<double, kNumPollutants>;

/// Grams per vehicle-hour for every (pollutant, operating mode).
class RateTable {
 public:
  RateTable() { rates_.fill({}); }

  double rate(Pollutant p, OpModeBin b) const { return rates_[static_cast<std::size_t>(p)][b.index()]; }
  void set(Pollutant p, OpModeBin b, double g_per_veh_hr);

 private:
  std::array<std::array<double, kNumBins>, kNumPollutants> rates_;
};

/// CSV `pollutant,bin,g_per_veh_hr`; all 6 x 23 cells exactly once, non-negative.
RateTable parse_rate_table(const std::string& text, const std::string& origin);
RateTable read_rate_table(const std::filesystem::path& path);
std::string format_rate_table(const RateTable& rt);

/// vehicle_hours * sum over bins of fraction * rate.
/// Throws ValidationError for an invalid distribution or negative activity.
Grams estimate_emissions(const OpModeDistribution& dist, double vehicle_hours, const RateTable& rt);

/// Vehicle-hours implied by detector data: count * length / avg_speed,
/// with count = volume * window. Zero when no vehicle was counted.
double estimated_vehicle_hours(double volume_vph, double window_s, double length_mi, double avg_speed_mph);

struct LinkEmissions {
  double vehicle_hours = 0.0;
  OpModeDistribution distribution;
  Grams grams{};
};

/// Per-link emissions of simulated trajectories: each link's distribution
/// times its vehicle-hours (one point is one vehicle-second).
std::map<std::string, LinkEmissions> ground_truth_emissions(std::span<const kinematics::TrajectoryPoint> points,
                                                            const kinematics::VehicleParams& params,
                                                            const RateTable& rt,
                                                            const kinematics::BinningRules& rules = {});

Grams network_total(const std::map<std::string, LinkEmissions>& per_link);

/// One row of emissions.csv.
struct EmissionRecord {
  std::string link_id;
  Pollutant pollutant = Pollutant::kHC;
  double grams = 0.0;
  std::string source;  // truth, mnn or baseline
};

std::string format_emissions_csv(const std::vector<EmissionRecord>& records);
std::vector<EmissionRecord> parse_emissions_csv(const std::string& text, const std::string& origin);

}  // namespace opmode::emissions
