#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aedt/aggregation.hpp"
#include "aedt/core.hpp"
#include "aedt/trace.hpp"

namespace aedt {

enum class Protocol { Aedt, AedtNoSleep, StaticTree };

struct TrafficConfig {
  double rate = 1.0;              // transfers per second per source
  int burst = 1;                  // packets per transfer
  double packet_size_bits = 4096;
  int sources = 3;                // CBR sources drawn from the node set
};

struct ScenarioConfig {
  double area_w = 500.0;
  double area_h = 500.0;
  int node_count = 40;
  double radio_range = 120.0;
  double initial_energy = 3.1;   // joules per node
  double comm_capacity = 10.0;   // packets per second per node
  double refresh_interval = 1.0;  // seconds
  double duration = 30.0;        // seconds
  TrafficConfig traffic{};
  double bandwidth = 2e6;        // bits per second
  double hop_latency = 0.01;     // seconds per hop
  OverloadPolicy overload = OverloadPolicy::Wait;
  DrainPolicy drains{};
  bool path_cache = true;
  bool prioritize_spill = false;
  Protocol protocol = Protocol::Aedt;
  std::uint64_t seed = 1;

  void validate() const;
};

/// One CBR submission: `count` packets from `source`, with priorities
/// fixed up front so every protocol sees the identical offered load.
struct TrafficEvent {
  double time = 0.0;
  NodeId source = 0;
  std::vector<int> priorities;  // one per packet
};

struct CycleSnapshot {
  std::uint64_t cycle = 0;
  std::int64_t parent = -1;
  std::uint64_t submitted = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  std::uint64_t deferred = 0;
  std::uint64_t undeliverable = 0;
  double energy_total = 0.0;  // sum of e_avail at cycle end

  bool operator==(const CycleSnapshot&) const = default;
};

struct MetricsRecord {
  double avg_delay = 0.0;          // seconds, over delivered packets
  double delivery_ratio = 1.0;     // delivered / submitted, 1.0 when idle
  double avg_energy_consumed = 0.0;  // joules per node
  double network_lifetime = 0.0;   // first node death, else run end
  std::uint64_t submitted = 0;
  std::uint64_t delivered = 0;
  std::vector<CycleSnapshot> per_cycle;

  bool operator==(const MetricsRecord&) const = default;
};

struct RunResult {
  MetricsRecord metrics;
  std::vector<TraceEvent> trace;
  NetworkTopology network;  // final state
  DrainLog drains;
  double initial_total_energy = 0.0;
  bool static_tree_disconnected = false;
};

/// Seeded random placement + CBR schedule, then the event loop.
RunResult run(const ScenarioConfig& config);

/// Event loop over an explicit placement and traffic schedule; the entry
/// point for hand-built fixtures.
RunResult run_scenario(const ScenarioConfig& config,
                       const std::vector<NodeSpec>& specs,
                       const std::vector<TrafficEvent>& traffic);

std::vector<NodeSpec> place_nodes(const ScenarioConfig& config,
                                  std::mt19937_64& rng);
std::vector<TrafficEvent> generate_traffic(const ScenarioConfig& config,
                                           std::size_t node_count,
                                           std::mt19937_64& rng);

/// One run per node count, seeds derived from (base seed, node count),
/// results in input order.
std::vector<RunResult> sweep(const ScenarioConfig& base,
                             const std::vector<int>& node_counts);

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t node_count);

/// Rebuild the metrics record from a trace; `run` emits exactly this.
MetricsRecord collect_metrics(const std::vector<TraceEvent>& trace);

}  // namespace aedt
