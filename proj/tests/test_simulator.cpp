#include <doctest.h>

#include <cmath>

#include "aedt/simulator.hpp"
#include "fixtures.hpp"

using namespace aedt;

namespace {

ScenarioConfig small_config() {
  ScenarioConfig cfg;
  cfg.node_count = 20;
  cfg.duration = 10.0;
  cfg.seed = 42;
  return cfg;
}

double total_energy(const NetworkTopology& net) {
  double sum = 0.0;
  for (const SensorNode& n : net.nodes()) sum += n.e_avail;
  return sum;
}

}  // namespace

TEST_CASE("a fixed seed reproduces the run byte for byte") {
  auto cfg = small_config();
  auto a = run(cfg);
  auto b = run(cfg);
  CHECK(a.metrics == b.metrics);
  CHECK(format_trace(a.trace) == format_trace(b.trace));
}

TEST_CASE("different seeds move the nodes") {
  auto cfg = small_config();
  auto a = run(cfg);
  cfg.seed = 43;
  auto b = run(cfg);
  CHECK(format_trace(a.trace) != format_trace(b.trace));
}

TEST_CASE("zero traffic: ratio one by convention, only awake drains") {
  auto cfg = small_config();
  cfg.traffic.rate = 0.0;
  auto result = run(cfg);
  CHECK(result.metrics.submitted == 0);
  CHECK(result.metrics.delivery_ratio == 1.0);
  CHECK(result.metrics.avg_delay == 0.0);
  // The only consumption is the parent keeping its radio up.
  for (const DrainEntry& e : result.drains) {
    CHECK(e.kind == DrainKind::Awake);
  }
  const double expected = cfg.drains.alpha * cfg.duration;  // one parent per cycle
  CHECK(std::abs(result.initial_total_energy - total_energy(result.network) -
                 expected) < 1e-9);
}

TEST_CASE("conservation audit holds for every protocol") {
  for (Protocol p :
       {Protocol::Aedt, Protocol::AedtNoSleep, Protocol::StaticTree}) {
    auto cfg = small_config();
    cfg.protocol = p;
    auto result = run(cfg);
    const double consumed =
        result.initial_total_energy - total_energy(result.network);
    CHECK(std::abs(consumed - drained_total(result.drains)) < 1e-9);
  }
}

TEST_CASE("metrics recomputed from the trace match the emitted record") {
  for (Protocol p :
       {Protocol::Aedt, Protocol::AedtNoSleep, Protocol::StaticTree}) {
    auto cfg = small_config();
    cfg.protocol = p;
    auto result = run(cfg);
    // Round-trip through the serialized form as well.
    auto reparsed = parse_trace(format_trace(result.trace));
    CHECK(collect_metrics(reparsed) == result.metrics);
  }
}

TEST_CASE("trace timestamps never decrease and actors are alive at emit") {
  auto result = run(small_config());
  double prev = 0.0;
  for (const TraceEvent& e : result.trace) {
    CHECK(e.time >= prev);
    prev = e.time;
  }
}

TEST_CASE("no-sleep ablation consumes at least as much energy") {
  // Dense deployment and a visible idle-listening cost: the comparison is
  // dominated by awake-seconds rather than by which transfers happen to
  // find a greedy route.
  for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
    ScenarioConfig cfg;
    cfg.node_count = 40;
    cfg.duration = 20.0;
    cfg.radio_range = 250.0;
    cfg.drains.alpha = 0.15;
    cfg.seed = seed;
    auto awake_cfg = cfg;
    awake_cfg.protocol = Protocol::AedtNoSleep;
    CHECK(run(awake_cfg).metrics.avg_energy_consumed >=
          run(cfg).metrics.avg_energy_consumed);
  }
}

TEST_CASE("hand-built 5-node line scenario matches the manual account") {
  // Line 0-1-2-3-4 spaced 8 m apart, range 10. Node 0 starts richest so
  // it is the first parent; node 4 sends one packet per second.
  ScenarioConfig cfg;
  cfg.node_count = 5;
  cfg.radio_range = 10.0;
  cfg.refresh_interval = 1.0;
  cfg.duration = 3.0;
  cfg.hop_latency = 0.01;
  cfg.drains = {1.0, 0.0};  // unit drains only, no awake drain
  std::vector<NodeSpec> specs = {
      {{0, 0}, 10.0, 10.0},
      {{8, 0}, 9.0, 10.0},
      {{16, 0}, 8.0, 10.0},
      {{24, 0}, 7.0, 10.0},
      {{32, 0}, 9.5, 10.0},
  };
  std::vector<TrafficEvent> traffic = {
      {0.5, 4, {0}}, {1.5, 4, {0}}, {2.5, 4, {0}}};
  auto result = run_scenario(cfg, specs, traffic);

  // Cycle 0: parent 0; path 4-3-2-1-0; drains one unit on all five.
  //   energies: 9, 8, 7, 6, 8.5
  // Cycle 1: parent 0 again (9 is the max); same path via cache;
  //   energies: 8, 7, 6, 5, 7.5
  // Cycle 2: parent 0 again; energies: 7, 6, 5, 4, 6.5
  CHECK(result.metrics.submitted == 3);
  CHECK(result.metrics.delivered == 3);
  CHECK(result.metrics.delivery_ratio == 1.0);
  CHECK(result.metrics.avg_delay == doctest::Approx(0.04));  // 4 hops
  CHECK(result.metrics.avg_energy_consumed == doctest::Approx(3.0));
  CHECK(result.metrics.network_lifetime == 3.0);  // nobody died
  REQUIRE(result.metrics.per_cycle.size() == 3);
  for (const auto& snap : result.metrics.per_cycle) {
    CHECK(snap.parent == 0);
    CHECK(snap.delivered == 1);
  }
  CHECK(result.network.node(0).e_avail == doctest::Approx(7.0));
  CHECK(result.network.node(3).e_avail == doctest::Approx(4.0));
}

TEST_CASE("lifetime records the first death") {
  // Node 1 relays for node 2 every cycle and starts with 2.5 J: two
  // transfers kill it during the third cycle's transfer at t=2.5.
  ScenarioConfig cfg;
  cfg.node_count = 3;
  cfg.radio_range = 10.0;
  cfg.duration = 5.0;
  cfg.drains = {1.0, 0.0};
  std::vector<NodeSpec> specs = {
      {{0, 0}, 10.0, 10.0}, {{8, 0}, 2.5, 10.0}, {{16, 0}, 9.0, 10.0}};
  std::vector<TrafficEvent> traffic = {
      {0.5, 2, {0}}, {1.5, 2, {0}}, {2.5, 2, {0}}, {3.5, 2, {0}}};
  auto result = run_scenario(cfg, specs, traffic);
  CHECK(result.metrics.network_lifetime == doctest::Approx(2.5));
  CHECK_FALSE(result.network.node(1).alive());
}

TEST_CASE("static tree reports a disconnected deployment and carries on") {
  ScenarioConfig cfg;
  cfg.node_count = 4;
  cfg.radio_range = 10.0;
  cfg.duration = 2.0;
  cfg.protocol = Protocol::StaticTree;
  std::vector<NodeSpec> specs = {{{0, 0}, 5.0, 10.0},
                                 {{8, 0}, 5.0, 10.0},
                                 {{200, 200}, 5.0, 10.0},
                                 {{208, 200}, 5.0, 10.0}};
  std::vector<TrafficEvent> traffic = {{0.5, 0, {0}}, {0.5, 2, {0}}};
  auto result = run_scenario(cfg, specs, traffic);
  CHECK(result.static_tree_disconnected);
  CHECK(result.metrics.submitted == 2);
  CHECK(result.metrics.delivered == 1);  // the far pair is unreachable
}

TEST_CASE("a 2-node network delivers identically under both protocols") {
  ScenarioConfig cfg;
  cfg.node_count = 2;
  cfg.radio_range = 10.0;
  cfg.duration = 3.0;
  std::vector<NodeSpec> specs = {{{0, 0}, 5.0, 10.0}, {{5, 0}, 4.0, 10.0}};
  std::vector<TrafficEvent> traffic = {{0.5, 1, {0}}, {1.5, 1, {0}}};
  auto aedt_result = run_scenario(cfg, specs, traffic);
  cfg.protocol = Protocol::StaticTree;
  auto base_result = run_scenario(cfg, specs, traffic);
  CHECK(aedt_result.metrics.delivered == base_result.metrics.delivered);
  CHECK(aedt_result.metrics.submitted == base_result.metrics.submitted);
}

TEST_CASE("sweep derives one deterministic record per node count") {
  auto cfg = small_config();
  cfg.duration = 5.0;
  auto records = sweep(cfg, {10, 20, 30});
  CHECK(records.size() == 3);
  auto again = sweep(cfg, {10, 20, 30});
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].metrics == again[i].metrics);
  }
  auto single = sweep(cfg, {20});
  ScenarioConfig direct = cfg;
  direct.node_count = 20;
  direct.seed = derive_seed(cfg.seed, 20);
  CHECK(single.front().metrics == run(direct).metrics);
  CHECK_THROWS(sweep(cfg, {}));
}

TEST_CASE("under-budget load delivers everything") {
  // Radio range covers the whole area, so every transmitter reaches the
  // parent in one hop and only the admission gate could refuse packets.
  ScenarioConfig cfg;
  cfg.node_count = 25;
  cfg.radio_range = 750.0;
  cfg.initial_energy = 100.0;
  cfg.duration = 8.0;
  cfg.seed = 9;
  auto result = run(cfg);
  CHECK(result.metrics.submitted > 0);
  CHECK(result.metrics.delivery_ratio == 1.0);
}
