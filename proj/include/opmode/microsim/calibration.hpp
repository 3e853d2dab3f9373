#pragma once

#include <vector>

#include "opmode/microsim/simulation.hpp"

namespace opmode::microsim {

struct CalibrationConfig {
  double threshold = 0.10;  // mean relative count error
  int max_iter = 25;
  double damping = 0.5;
  double ratio_clamp = 10.0;  // observed/simulated ratios are clamped to [1/c, c]
  SimConfig sim;
};

struct CalibrationStep {
  int iteration = 0;
  double error = 0.0;
  double damping = 0.0;
  bool accepted = false;
};

struct CalibrationResult {
  ODMatrix od;  // best iterate
  double error = 0.0;
  int evaluations = 0;
  bool converged = false;
  std::vector<CalibrationStep> history;
};

/// mean over observed links of |sim - obs| / max(obs, 1).
double mean_relative_count_error(const ObservedCounts& simulated, const ObservedCounts& observed);

/// Scales OD flows until simulated link counts match `observed`. Each pair is
/// multiplied by the damped geometric mean of observed/simulated over the
/// observed links on its path. An iterate that increases the error is
/// rejected and retried from the best one with half the damping.
///
/// Throws ValidationError when an observed link is on no OD path.
CalibrationResult calibrate_od(const Network& net, const ODMatrix& od0, const ObservedCounts& observed,
                               const CalibrationConfig& cfg);

}  // namespace opmode::microsim
