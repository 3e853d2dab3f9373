#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "opmode/common/error.hpp"
#include "opmode/kinematics.hpp"
#include "opmode/microsim/idm.hpp"
#include "opmode/microsim/network.hpp"
#include "opmode/microsim/traffic_data.hpp"

namespace opmode::microsim {

struct SimConfig {
  std::uint64_t seed = 0;
  long duration_s = 3600;
  long detector_window_s = 3600;
  double substep_s = 0.25;
  IdmParams idm;
  double vehicle_length_m = 5.0;
  // A vehicle that would need more than this deceleration to stop when its
  // approach turns red proceeds through the intersection.
  double stop_decision_decel = 4.0;
  double yield_speed_mph = 15.0;  // approach speed at roundabouts and yield (minor) approaches
  double detection_zone_m = 40.0;  // actuated-signal detector setback
  double speed_margin_mph = 5.0;   // governor above link free-flow speed
  long gridlock_timeout_s = 300;
};

struct SimStats {
  long departed = 0;
  long arrived = 0;
  long on_network = 0;
  long waiting_at_origin = 0;      // generated but not yet inserted at the horizon
  long red_crossings_committed = 0;  // entered on red after committing at onset
  long red_violations = 0;         // entered on red without having committed
};

struct Arrival {
  std::int64_t vehicle_id = 0;
  long depart_t = 0;
  double arrive_time = 0.0;
};

struct SimResult {
  std::vector<kinematics::TrajectoryPoint> trajectories;  // sorted by (t, vehicle_id)
  std::vector<DetectorRecord> detectors;
  std::vector<Arrival> arrivals;
  SimStats stats;
};

class GridlockError : public RuntimeFailure {
 public:
  using RuntimeFailure::RuntimeFailure;
};

/// Runs the scenario for `cfg.duration_s` seconds and returns 1 Hz points.
/// The output depends only on the inputs and the seed.
SimResult simulate(const Network& net, const ODMatrix& od, const SimConfig& cfg);

/// Per link and window: vehicles whose first point on the link falls inside
/// the window, and the mean speed of the link's points in the window.
/// `horizon_s` <= 0 means "up to the last point".
std::vector<DetectorRecord> detector_aggregate(std::span<const kinematics::TrajectoryPoint> points,
                                               const Network& net, long window_s, long horizon_s = 0);

}  // namespace opmode::microsim
