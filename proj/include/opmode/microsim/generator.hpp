#pragma once

#include <cstdint>

#include "opmode/microsim/network.hpp"
#include "opmode/microsim/traffic_data.hpp"

namespace opmode::microsim {

struct GridCitySpec {
  int rows = 6;
  int cols = 6;
  std::uint64_t seed = 1;
  double block_min_mi = 0.10;
  double block_max_mi = 0.35;
};

/// Synthetic street grid with mixed road classes and intersection controls.
/// Every perimeter node is an origin and destination zone.
Network make_grid_city(const GridCitySpec& spec);

/// Random demand between all zone pairs, scaled to `total_veh_per_hr`.
ODMatrix make_random_od(const Network& net, std::uint64_t seed, double total_veh_per_hr);

}  // namespace opmode::microsim
