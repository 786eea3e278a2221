#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace aedt {

using NodeId = std::uint32_t;

enum class NodeState { Sleep, Awake };
enum class NodeRole { Plain, Parent };

struct Position {
  double x = 0.0;
  double y = 0.0;
};

/// One sensor in the field. Energy is tracked directly; a node whose
/// e_avail reaches zero is dead and takes no further actions.
struct SensorNode {
  NodeId id = 0;
  Position pos{};
  double e_avail = 0.0;        // joules
  double comm_capacity = 0.0;  // packets per second
  NodeState state = NodeState::Sleep;
  NodeRole role = NodeRole::Plain;
  double awake_since = -1.0;  // negative when the awake clock is not running

  bool alive() const { return e_avail > 0.0; }
};

struct NodeSpec {
  Position pos{};
  double initial_energy = 0.0;
  double comm_capacity = 0.0;
};

/// Node set plus the disc-model connectivity graph: (i, j) are connected
/// iff their euclidean distance is <= radio_range. Edges are geometric and
/// do not change when nodes die; liveness is filtered at query time.
class NetworkTopology {
 public:
  static NetworkTopology build(const std::vector<NodeSpec>& specs,
                               double radio_range);

  std::size_t size() const { return nodes_.size(); }
  double radio_range() const { return radio_range_; }

  SensorNode& node(NodeId id) { return nodes_.at(id); }
  const SensorNode& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<SensorNode>& nodes() const { return nodes_; }
  std::vector<SensorNode>& nodes() { return nodes_; }

  bool connected(NodeId a, NodeId b) const;
  double distance(NodeId a, NodeId b) const;

  /// Geometric neighbors, sorted by id.
  const std::vector<NodeId>& neighbors(NodeId id) const { return adj_.at(id); }
  /// Neighbors that are still alive, sorted by id.
  std::vector<NodeId> alive_neighbors(NodeId id) const;

  std::size_t edge_count() const;
  std::size_t alive_count() const;

 private:
  std::vector<SensorNode> nodes_;
  std::vector<std::vector<NodeId>> adj_;
  double radio_range_ = 0.0;
};

/// Flip a node's sleep/awake state, maintaining the awake clock used by
/// the time-proportional drain. The current parent may not be put to
/// sleep, and dead nodes reject any transition.
void set_state(NetworkTopology& net, NodeId id, NodeState new_state,
               double now);

}  // namespace aedt
