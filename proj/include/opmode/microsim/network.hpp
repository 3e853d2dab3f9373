#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace opmode::microsim {

enum class RoadClass { kArterial, kCollector, kAccess, kLocal };
enum class Control { kNone, kActuated, kPretimed, kRoundabout };
enum class Priority { kMajor, kMinor, kStop };

std::string_view to_string(RoadClass c);
std::string_view to_string(Control c);
std::string_view to_string(Priority p);
RoadClass parse_road_class(std::string_view s);
Control parse_control(std::string_view s);
Priority parse_priority(std::string_view s);

/// A directed road segment. `control` and `priority` describe the
/// intersection at its downstream end.
struct Link {
  std::string id;
  std::string from;
  std::string to;
  double length_mi = 0.0;
  int lanes = 1;
  double free_flow_speed_mph = 0.0;
  double speed_limit_mph = 0.0;
  RoadClass road_class = RoadClass::kLocal;
  Control control = Control::kNone;
  Priority priority = Priority::kMajor;
};

struct Node {
  std::string id;
  double x = 0.0;
  double y = 0.0;
};

enum class SignalType { kPretimed, kActuated };

struct SignalPhase {
  std::vector<std::string> approaches;  // link ids ending at the node
  double green_start = 0.0;             // s into the cycle
  double green_length = 0.0;            // s; minimum green when actuated
};

struct SignalPlan {
  std::string node;
  double cycle_length = 0.0;
  SignalType type = SignalType::kPretimed;
  std::vector<SignalPhase> phases;
  // Actuated only: extension per detector arrival, green cap, all-red between phases.
  double gap_out = 3.0;
  double max_green = 0.0;  // 0 means twice the phase's minimum green
  double clearance = 3.0;
};

enum class ZoneRole { kOrigin, kDestination, kBoth };

struct Zone {
  std::string node;
  ZoneRole role = ZoneRole::kBoth;

  bool is_origin() const { return role != ZoneRole::kDestination; }
  bool is_destination() const { return role != ZoneRole::kOrigin; }
};

/// A validated road network. Construction checks ids, link ends, signal
/// plans and that every origin zone reaches every destination zone.
class Network {
 public:
  static Network build(std::vector<Node> nodes, std::vector<Link> links,
                       std::vector<SignalPlan> signals, std::vector<Zone> zones);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<SignalPlan>& signals() const { return signals_; }
  const std::vector<Zone>& zones() const { return zones_; }

  std::optional<std::size_t> find_link(std::string_view id) const;
  std::optional<std::size_t> find_node(std::string_view id) const;
  std::size_t link_index(std::string_view id) const;  // throws ValidationError
  std::size_t node_index(std::string_view id) const;  // throws ValidationError
  const Zone* find_zone(std::string_view node) const;

  const std::vector<std::size_t>& outgoing(std::size_t node) const { return outgoing_[node]; }
  std::size_t from_node(std::size_t link) const { return link_from_[link]; }
  std::size_t to_node(std::size_t link) const { return link_to_[link]; }

  /// Signal plan controlling the downstream end of `link`, if any.
  const SignalPlan* signal_for(std::size_t link) const;

  /// Links of the minimum free-flow-time path, or nullopt when unreachable.
  /// Ties break towards lower link index, so the result is deterministic.
  std::optional<std::vector<std::size_t>> shortest_path(std::size_t from_node, std::size_t to_node) const;

 private:
  void validate_and_index();

  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::vector<SignalPlan> signals_;
  std::vector<Zone> zones_;
  std::unordered_map<std::string, std::size_t> node_ix_, link_ix_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::vector<std::size_t> link_from_, link_to_;
  std::vector<std::optional<std::size_t>> signal_of_node_;
};

Network load_network(const std::filesystem::path& path);
Network parse_network(const std::string& json_text, const std::string& origin);
std::string format_network(const Network& net);

inline constexpr double kMetersPerMile = 1609.344;
inline constexpr double kMpsPerMph = 0.44704;

}  // namespace opmode::microsim
