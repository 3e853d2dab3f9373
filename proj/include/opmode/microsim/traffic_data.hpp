#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace opmode::microsim {

/// Origin-destination demand, veh/hr per zone pair. Keys are zone node ids.
class ODMatrix {
 public:
  using Key = std::pair<std::string, std::string>;

  void set(const std::string& origin, const std::string& destination, double veh_per_hr);
  double flow(const std::string& origin, const std::string& destination) const;
  const std::map<Key, double>& flows() const { return flows_; }
  double total() const;
  bool operator==(const ODMatrix&) const = default;

 private:
  std::map<Key, double> flows_;
};

ODMatrix read_od_csv(const std::filesystem::path& path);
ODMatrix parse_od_csv(const std::string& text, const std::string& origin);
std::string format_od_csv(const ODMatrix& od);

/// One loop-detector aggregate: vehicles entering `link_id` during the window
/// and their time-mean speed while on it.
struct DetectorRecord {
  std::string link_id;
  long window_start = 0;  // s
  long window_len = 0;    // s
  long count = 0;
  double avg_speed = 0.0;  // mph
};

std::vector<DetectorRecord> read_detector_csv(const std::filesystem::path& path);
std::vector<DetectorRecord> parse_detector_csv(const std::string& text, const std::string& origin);
std::string format_detector_csv(const std::vector<DetectorRecord>& records);

/// Observed link counts, `link_id,count`.
using ObservedCounts = std::map<std::string, double>;
ObservedCounts read_counts_csv(const std::filesystem::path& path);
ObservedCounts parse_counts_csv(const std::string& text, const std::string& origin);
std::string format_counts_csv(const ObservedCounts& counts);

/// Sum of detector counts per link over all windows.
ObservedCounts total_counts(const std::vector<DetectorRecord>& records);

}  // namespace opmode::microsim
