#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace opmode::kinematics {

/// One vehicle-second of a 1 Hz trajectory.
struct TrajectoryPoint {
  std::int64_t vehicle_id = 0;
  std::int64_t t = 0;   // s
  std::string link_id;
  double v = 0.0;       // mph, >= 0
  double a = 0.0;       // mph/s, v(t) - v(t-1)
};

/// Road-load coefficients and the unit conversions that turn mph and lb into
/// m/s and metric tonnes. Defaults are light-duty passenger-car values.
struct VehicleParams {
  double A = 0.156461;       // kW*s/m
  double B = 0.00200193;     // kW*s^2/m^2
  double C = 0.000492646;    // kW*s^3/m^3
  double m = 3260.0;         // lb
  double c1 = 0.44704;       // (m/s) per mph
  double c2 = 4.5359237e-4;  // tonne per lb

  /// Throws ValidationError when a coefficient is out of range.
  void validate() const;
};

inline constexpr std::size_t kNumBins = 23;

/// One of the 23 MOVES running operating modes. Only those ids can be held.
class OpModeBin {
 public:
  static constexpr std::array<int, kNumBins> kIds = {0,  1,  11, 12, 13, 14, 15, 16, 21, 22, 23, 24,
                                                     25, 27, 28, 29, 30, 33, 35, 37, 38, 39, 40};

  static std::optional<OpModeBin> from_id(int id);
  static constexpr OpModeBin at(std::size_t index) { return OpModeBin(static_cast<std::uint8_t>(index)); }
  /// Like from_id but throws std::invalid_argument for ids outside the 23.
  static OpModeBin of(int id);

  constexpr int id() const { return kIds[index_]; }
  constexpr std::size_t index() const { return index_; }

  friend constexpr bool operator==(OpModeBin, OpModeBin) = default;

 private:
  constexpr explicit OpModeBin(std::uint8_t index) : index_(index) {}
  std::uint8_t index_;
};

/// Fractions of vehicle-seconds per operating mode.
struct OpModeDistribution {
  std::array<double, kNumBins> fractions{};
  bool empty = false;  // no points; all fractions are zero

  double& operator[](OpModeBin b) { return fractions[b.index()]; }
  double operator[](OpModeBin b) const { return fractions[b.index()]; }
  double sum() const;
  /// Fractions in [0, 1] summing to 1 within `tol`, or a flagged empty distribution.
  bool is_valid(double tol = 1e-9) const;
};

enum class BrakingWindow {
  kEach,  // each of the last three accelerations <= -1 mph/s
  kMean,  // their mean <= -1 mph/s
};

/// Where 0 <= VSP < 6 lands at 50 mph and above, where the bin table has no own row.
enum class HighwayLowPower { kBin33, kBin35 };

struct BinningRules {
  double hard_brake_mphps = -2.0;
  double sustained_brake_mphps = -1.0;
  double idle_speed_mph = 1.0;
  BrakingWindow braking_window = BrakingWindow::kEach;
  HighwayLowPower highway_low_power = HighwayLowPower::kBin33;
};

/// Vehicle specific power in kW/tonne from speed (mph) and acceleration (mph/s).
double compute_vsp(double v_mph, double a_mphps, const VehicleParams& params);
double compute_vsp(const TrajectoryPoint& point, const VehicleParams& params);

/// Accelerations at t-1 and t-2, when the vehicle was observed at both.
using BrakeHistory = std::optional<std::array<double, 2>>;

OpModeBin classify_opmode(const TrajectoryPoint& current, const BrakeHistory& prev2, double vsp,
                          const BinningRules& rules = {});

/// Index of the point one second earlier for the same vehicle, or npos.
/// Throws ValidationError on a repeated (vehicle, t).
std::vector<std::size_t> predecessor_index(std::span<const TrajectoryPoint> points);
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Operating mode of every point, in input order, with braking history taken
/// from the same vehicle's neighbouring seconds anywhere in `points`.
/// Parallelised over points with OpenMP.
std::vector<OpModeBin> classify_points(std::span<const TrajectoryPoint> points,
                                       const VehicleParams& params, const BinningRules& rules = {});

namespace serial {
/// Single-threaded reference for classify_points.
std::vector<OpModeBin> classify_points(std::span<const TrajectoryPoint> points,
                                       const VehicleParams& params, const BinningRules& rules = {});
}  // namespace serial

/// Normalised histogram of bins; empty input gives a flagged all-zero distribution.
OpModeDistribution distribution_from_bins(std::span<const OpModeBin> bins);

/// Distribution of the points of one link. Braking history only comes from
/// points in this input.
OpModeDistribution opmode_distribution(std::span<const TrajectoryPoint> points,
                                       const VehicleParams& params, const BinningRules& rules = {});

}  // namespace opmode::kinematics
