#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "aedt/core.hpp"

namespace aedt {

struct Contender {
  NodeId id = 0;
  double e_avail = 0.0;
  double comm_capacity = 0.0;
};

struct ElectionResult {
  NodeId parent = 0;
  std::uint64_t round = 0;
  std::vector<Contender> contenders;  // alive nodes at election time, by id
};

struct NetworkDeadError : std::runtime_error {
  NetworkDeadError() : std::runtime_error("no alive nodes left") {}
};

/// Energy census of the alive nodes, ordered by id.
std::vector<Contender> broadcast_energy(const NetworkTopology& net);

/// Elect the alive node with maximal e_avail; energy ties go to the
/// larger comm_capacity, double ties to the smaller id. The winner is
/// made Parent and woken; every other alive node goes to sleep.
ElectionResult select_parent(NetworkTopology& net, std::uint64_t round,
                             double now);

}  // namespace aedt
