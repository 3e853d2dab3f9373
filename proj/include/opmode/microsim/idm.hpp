#pragma once

namespace opmode::microsim {

struct IdmParams {
  double max_accel = 1.5;    // m/s^2
  double comfort_decel = 2.0;  // m/s^2
  double time_headway = 1.5;   // s
  double min_gap = 2.0;        // m
  double exponent = 4.0;
  double emergency_decel = 8.0;  // m/s^2, lower clamp
};

/// Intelligent Driver Model acceleration (m/s^2) for speed `v`, bumper gap
/// `gap` (m, may be +inf) to a leader moving at `lead_v`, desired speed `v0`.
/// A non-positive gap yields the emergency deceleration.
double idm_acceleration(double v, double gap, double lead_v, double v0, const IdmParams& params = {});

}  // namespace opmode::microsim
