#include "aedt/election.hpp"

namespace aedt {

std::vector<Contender> broadcast_energy(const NetworkTopology& net) {
  std::vector<Contender> census;
  for (const SensorNode& n : net.nodes()) {
    if (!n.alive()) continue;
    census.push_back({n.id, n.e_avail, n.comm_capacity});
  }
  return census;
}

ElectionResult select_parent(NetworkTopology& net, std::uint64_t round,
                             double now) {
  ElectionResult result;
  result.round = round;
  result.contenders = broadcast_energy(net);
  if (result.contenders.empty()) {
    throw NetworkDeadError{};
  }

  // Scanning in id order with strict comparisons leaves the smallest id
  // as winner of a full tie.
  const Contender* best = &result.contenders.front();
  for (const Contender& c : result.contenders) {
    if (c.e_avail > best->e_avail ||
        (c.e_avail == best->e_avail && c.comm_capacity > best->comm_capacity)) {
      best = &c;
    }
  }
  result.parent = best->id;

  for (SensorNode& n : net.nodes()) {
    if (!n.alive()) {
      n.role = NodeRole::Plain;
      n.state = NodeState::Sleep;
      n.awake_since = -1.0;
      continue;
    }
    if (n.id == result.parent) {
      n.role = NodeRole::Parent;
      n.state = NodeState::Awake;
      n.awake_since = now;
    } else {
      n.role = NodeRole::Plain;
      n.state = NodeState::Sleep;
      n.awake_since = -1.0;
    }
  }
  return result;
}

}  // namespace aedt
