#include <doctest.h>

#include <random>

#include "aedt/election.hpp"
#include "fixtures.hpp"

using namespace aedt;

namespace {

NetworkTopology three_nodes(double ea, double eb, double ec, double cca = 10,
                            double ccb = 10, double ccc = 10) {
  std::vector<NodeSpec> specs = {
      {{0, 0}, ea, cca}, {{5, 0}, eb, ccb}, {{0, 5}, ec, ccc}};
  return NetworkTopology::build(specs, 10.0);
}

// Linear-scan argmax over (e_avail, comm_capacity, -id).
NodeId oracle_parent(const NetworkTopology& net) {
  const SensorNode* best = nullptr;
  for (const SensorNode& n : net.nodes()) {
    if (!n.alive()) continue;
    if (best == nullptr || n.e_avail > best->e_avail ||
        (n.e_avail == best->e_avail &&
         (n.comm_capacity > best->comm_capacity ||
          (n.comm_capacity == best->comm_capacity && n.id < best->id)))) {
      best = &n;
    }
  }
  REQUIRE(best != nullptr);
  return best->id;
}

}  // namespace

TEST_CASE("the unique energy maximum wins") {
  auto net = three_nodes(50.0, 30.0, 20.0);
  CHECK(select_parent(net, 0, 0.0).parent == 0);
}

TEST_CASE("energy ties go to the larger communication capacity") {
  auto net = three_nodes(40.0, 40.0, 10.0, 5, 8, 10);
  CHECK(select_parent(net, 0, 0.0).parent == 1);
}

TEST_CASE("full ties go to the smaller id") {
  auto net = three_nodes(40.0, 40.0, 10.0, 5, 5, 10);
  CHECK(select_parent(net, 0, 0.0).parent == 0);
}

TEST_CASE("dead nodes cannot be elected; a dead network throws") {
  auto net = three_nodes(50.0, 30.0, 20.0);
  net.node(0).e_avail = 0.0;
  CHECK(select_parent(net, 0, 0.0).parent == 1);
  net.node(1).e_avail = 0.0;
  net.node(2).e_avail = 0.0;
  CHECK_THROWS_AS(select_parent(net, 0, 0.0), NetworkDeadError);
}

TEST_CASE("broadcast_energy lists alive nodes in id order") {
  auto net = three_nodes(50.0, 30.0, 20.0);
  auto census = broadcast_energy(net);
  REQUIRE(census.size() == 3);
  for (std::size_t i = 0; i < census.size(); ++i) {
    CHECK(census[i].id == i);
    CHECK(census[i].e_avail == net.node(census[i].id).e_avail);
    CHECK(census[i].comm_capacity == net.node(census[i].id).comm_capacity);
  }
  net.node(1).e_avail = 0.0;
  census = broadcast_energy(net);
  REQUIRE(census.size() == 2);
  CHECK(census[0].id == 0);
  CHECK(census[1].id == 2);
}

TEST_CASE("election matches the argmax oracle on 1000 random networks") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 5 + rng() % 96;
    auto net = NetworkTopology::build(
        aedt::testing::random_specs(rng, n, 500.0), 120.0);
    // Kill a few nodes at random.
    for (auto& node : net.nodes()) {
      if (rng() % 10 == 0 && net.alive_count() > 1) node.e_avail = 0.0;
    }
    CHECK(select_parent(net, trial, 0.0).parent == oracle_parent(net));
  }
}

TEST_CASE("post-election state: exactly the parent is awake") {
  std::mt19937_64 rng(55);
  auto net = NetworkTopology::build(
      aedt::testing::random_specs(rng, 30, 400.0), 100.0);
  auto result = select_parent(net, 1, 2.5);
  std::size_t awake = 0, parents = 0;
  for (const SensorNode& n : net.nodes()) {
    if (n.state == NodeState::Awake) {
      ++awake;
      CHECK(n.id == result.parent);
      CHECK(n.awake_since == 2.5);
    }
    if (n.role == NodeRole::Parent) ++parents;
  }
  CHECK(awake == 1);
  CHECK(parents == 1);
}

TEST_CASE("re-election without energy changes is idempotent") {
  std::mt19937_64 rng(77);
  auto net = NetworkTopology::build(
      aedt::testing::random_specs(rng, 25, 400.0), 100.0);
  const NodeId first = select_parent(net, 0, 0.0).parent;
  CHECK(select_parent(net, 1, 1.0).parent == first);
}

TEST_CASE("scaling all energies leaves the winner unchanged") {
  std::mt19937_64 rng(78);
  auto net = NetworkTopology::build(
      aedt::testing::random_specs(rng, 25, 400.0), 100.0);
  const NodeId before = select_parent(net, 0, 0.0).parent;
  for (auto& n : net.nodes()) n.e_avail *= 4.0;
  CHECK(select_parent(net, 1, 0.0).parent == before);
}
