#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "aedt/capacity.hpp"
#include "aedt/core.hpp"
#include "aedt/election.hpp"
#include "aedt/energy.hpp"
#include "aedt/routing.hpp"

namespace aedt {

struct Packet {
  std::uint64_t seq = 0;
  NodeId source = 0;
  double created_at = 0.0;
  double size_bits = 0.0;
  int priority = 0;  // lower = more important
};

struct TransferRequest {
  NodeId transmitter = 0;
  std::vector<Packet> packets;
  double submitted_at = 0.0;
  int deferrals = 0;  // full refresh intervals spent in the wait queue
};

enum class OverloadPolicy { Wait, Prioritize };

enum class TransferStatus {
  Delivered,
  Partial,        // overload, prioritized chunk delivered, rest dropped
  Deferred,       // overload, whole request waits for the next refresh
  NoPath,
  ParentDown,
  TransmitterDead,
};

struct TransferOutcome {
  TransferStatus status = TransferStatus::Delivered;
  std::vector<Packet> delivered;
  std::vector<Packet> deferred;
  std::vector<Packet> dropped;
  std::vector<Packet> undeliverable;
  std::optional<Path> path_used;
  std::optional<double> delivered_at;
};

struct CycleConfig {
  double refresh_interval = 1.0;  // seconds
  double hop_latency = 0.01;      // seconds per hop
  double bandwidth = 2e6;         // bits per second
  DrainPolicy drains{};
  OverloadPolicy overload = OverloadPolicy::Wait;
  bool path_cache = true;
  bool prioritize_spill = false;  // spill the excess instead of dropping it
  bool sleep_enabled = true;
};

/// Mutable per-cycle orchestration state.
struct CycleState {
  std::uint64_t cycle = 0;
  bool parent_known = false;
  NodeId parent = 0;
  CapacityState budget{};
  std::deque<TransferRequest> wait_queue;  // deferred, FIFO
  std::size_t path_select_calls = 0;
  double last_refresh_at = 0.0;
};

struct RefreshReport {
  ElectionResult election;
  /// Wait-deferred requests replayed into the new cycle, in order.
  std::vector<std::pair<TransferRequest, TransferOutcome>> replayed;
};

/// Start a new cycle: elect the parent, renew its packet budget, put the
/// rest of the network to sleep and replay the deferred requests.
RefreshReport refresh_network(NetworkTopology& net, MemoryTable& table,
                              CycleState& state, const CycleConfig& cfg,
                              double now, DrainLog& log);

/// One transfer toward the current parent: resolve the path through the
/// memory table, pass the parent's admission gate, then deliver, deliver
/// a prioritized chunk, or defer per the overload policy. Energy drains
/// are applied for whatever actually flowed.
TransferOutcome submit_transfer(const TransferRequest& request,
                                OverloadPolicy policy, NetworkTopology& net,
                                MemoryTable& table, CycleState& state,
                                const CycleConfig& cfg, DrainLog& log);

/// End-to-end delay of a delivered transfer: delivered_at minus the
/// earliest packet creation time (deferral intervals included).
std::optional<double> transfer_delay(const TransferRequest& request,
                                     const TransferOutcome& outcome);

}  // namespace aedt
