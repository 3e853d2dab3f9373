#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "opmode/kinematics.hpp"

namespace opmode::kinematics {

inline constexpr const char* kTrajectoryHeader = "vehicle_id,t,link_id,v_mph,a_mphps";

std::vector<TrajectoryPoint> read_trajectory_csv(const std::filesystem::path& path);
std::vector<TrajectoryPoint> parse_trajectory_csv(const std::string& text, const std::string& origin);
std::string format_trajectory_csv(const std::vector<TrajectoryPoint>& points);
void write_trajectory_csv(const std::filesystem::path& path, const std::vector<TrajectoryPoint>& points);

/// JSON object with exactly the keys A, B, C, m, c1, c2.
VehicleParams read_vehicle_params(const std::filesystem::path& path);
VehicleParams parse_vehicle_params(const std::string& json_text, const std::string& origin);
std::string format_vehicle_params(const VehicleParams& params);

}  // namespace opmode::kinematics
