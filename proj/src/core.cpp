#include "aedt/core.hpp"

#include <cmath>

namespace aedt {

NetworkTopology NetworkTopology::build(const std::vector<NodeSpec>& specs,
                                       double radio_range) {
  if (specs.empty()) {
    throw std::invalid_argument("topology needs at least one node");
  }
  if (radio_range <= 0.0) {
    throw std::invalid_argument("radio range must be positive");
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].initial_energy <= 0.0) {
      throw std::invalid_argument("initial energy must be positive");
    }
    if (specs[i].comm_capacity <= 0.0) {
      throw std::invalid_argument("communication capacity must be positive");
    }
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      if (specs[i].pos.x == specs[j].pos.x && specs[i].pos.y == specs[j].pos.y) {
        throw std::invalid_argument("duplicate node positions");
      }
    }
  }

  NetworkTopology net;
  net.radio_range_ = radio_range;
  net.nodes_.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    SensorNode n;
    n.id = static_cast<NodeId>(i);
    n.pos = specs[i].pos;
    n.e_avail = specs[i].initial_energy;
    n.comm_capacity = specs[i].comm_capacity;
    net.nodes_.push_back(n);
  }
  net.adj_.assign(specs.size(), {});
  for (NodeId i = 0; i < net.nodes_.size(); ++i) {
    for (NodeId j = i + 1; j < net.nodes_.size(); ++j) {
      if (net.distance(i, j) <= radio_range) {
        net.adj_[i].push_back(j);
        net.adj_[j].push_back(i);
      }
    }
  }
  return net;
}

double NetworkTopology::distance(NodeId a, NodeId b) const {
  const Position& pa = nodes_.at(a).pos;
  const Position& pb = nodes_.at(b).pos;
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

bool NetworkTopology::connected(NodeId a, NodeId b) const {
  if (a == b) return false;
  return distance(a, b) <= radio_range_;
}

std::vector<NodeId> NetworkTopology::alive_neighbors(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId n : adj_.at(id)) {
    if (nodes_[n].alive()) out.push_back(n);
  }
  return out;
}

std::size_t NetworkTopology::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& nbrs : adj_) degree_sum += nbrs.size();
  return degree_sum / 2;
}

std::size_t NetworkTopology::alive_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) {
    if (node.alive()) ++n;
  }
  return n;
}

void set_state(NetworkTopology& net, NodeId id, NodeState new_state,
               double now) {
  SensorNode& n = net.node(id);
  if (!n.alive()) {
    throw std::invalid_argument("dead node cannot change state");
  }
  if (n.role == NodeRole::Parent && new_state == NodeState::Sleep) {
    throw std::invalid_argument("the parent node stays awake until refresh");
  }
  if (n.state == new_state) return;  // idempotent, clock untouched
  n.state = new_state;
  n.awake_since = (new_state == NodeState::Awake) ? now : -1.0;
}

}  // namespace aedt
