#pragma once

#include <random>
#include <vector>

#include "aedt/core.hpp"

namespace aedt::testing {

// Six-node fixture mirroring the path-selection walkthrough: a chain
// A - B - C - F - E - D under radio range 10, with energies arranged so
// the greedy walk from F toward parent A goes F - C - B - A.
//
// Ids by insertion order: A=0, B=1, C=2, D=3, E=4, F=5.
inline constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5;

inline NetworkTopology fig4_fixture() {
  std::vector<NodeSpec> specs = {
      {{0.0, 0.0}, 50.0, 10.0},    // A
      {{0.0, 8.0}, 30.0, 10.0},    // B
      {{0.0, 16.0}, 20.0, 10.0},   // C
      {{14.0, 32.0}, 15.0, 10.0},  // D
      {{14.0, 24.0}, 10.0, 10.0},  // E
      {{6.0, 24.0}, 12.0, 10.0},   // F
  };
  return NetworkTopology::build(specs, 10.0);
}

inline std::vector<NodeSpec> random_specs(std::mt19937_64& rng,
                                          std::size_t count, double area,
                                          double max_energy = 100.0) {
  auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<NodeSpec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    NodeSpec s;
    s.pos.x = unit() * area;
    s.pos.y = unit() * area;
    // Coarse levels force energy and capacity ties now and then.
    s.initial_energy = 1.0 + static_cast<double>(rng() % 50) * max_energy / 50.0;
    s.comm_capacity = 1.0 + static_cast<double>(rng() % 8);
    specs.push_back(s);
  }
  return specs;
}

}  // namespace aedt::testing
