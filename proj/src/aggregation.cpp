#include "aedt/aggregation.hpp"

#include <algorithm>
#include <stdexcept>

namespace aedt {

namespace {

std::vector<NodeId> intermediates_of(const Path& path) {
  std::vector<NodeId> mids;
  for (std::size_t i = 1; i + 1 < path.hops.size(); ++i) {
    mids.push_back(path.hops[i]);
  }
  return mids;
}

void deliver_packets(const TransferRequest& request,
                     std::vector<Packet> packets, const Path& path,
                     TransferOutcome& out, NetworkTopology& net,
                     CycleState& state, const CycleConfig& cfg,
                     DrainLog& log) {
  const double duration =
      static_cast<double>(path.hop_count()) * cfg.hop_latency;
  // Deferred requests are charged one full refresh interval per cycle
  // spent waiting; drains stay on the physical clock so the log and the
  // trace remain in emission order.
  const double now = request.deferrals > 0 ? state.last_refresh_at
                                           : request.submitted_at;
  out.delivered = std::move(packets);
  out.path_used = path;
  out.delivered_at = request.submitted_at +
                     request.deferrals * cfg.refresh_interval + duration;

  apply_transaction_drain(cfg.drains, state.parent, request.transmitter,
                          intermediates_of(path), net, log, now);
  if (cfg.sleep_enabled) {
    // Transmitter and intermediates are awake only for the transfer.
    apply_awake_drain(cfg.drains, request.transmitter, duration, net, log,
                      now);
    for (NodeId mid : intermediates_of(path)) {
      apply_awake_drain(cfg.drains, mid, duration, net, log, now);
    }
  }
}

}  // namespace

TransferOutcome submit_transfer(const TransferRequest& request,
                                OverloadPolicy policy, NetworkTopology& net,
                                MemoryTable& table, CycleState& state,
                                const CycleConfig& cfg, DrainLog& log) {
  if (request.packets.empty()) {
    throw std::invalid_argument("transfer request needs at least one packet");
  }
  if (!state.parent_known) {
    throw std::invalid_argument("no parent elected for the current cycle");
  }

  TransferOutcome out;
  if (!net.node(request.transmitter).alive()) {
    out.status = TransferStatus::TransmitterDead;
    out.undeliverable = request.packets;
    return out;
  }
  if (!net.node(state.parent).alive()) {
    // Parent died mid-cycle; no re-election until the next refresh.
    out.status = TransferStatus::ParentDown;
    out.undeliverable = request.packets;
    return out;
  }

  // The parent aggregates its own packets locally.
  if (request.transmitter == state.parent) {
    out.status = TransferStatus::Delivered;
    out.delivered = request.packets;
    out.delivered_at =
        request.submitted_at + request.deferrals * cfg.refresh_interval;
    return out;
  }

  // Path resolution: memory table first, greedy walk on a miss.
  std::optional<Path> path;
  if (cfg.path_cache) {
    path = table.lookup(net, state.parent, request.transmitter);
  }
  if (!path) {
    ++state.path_select_calls;
    path = path_select(net, request.transmitter, state.parent);
    if (path && cfg.path_cache) {
      table.update(net, state.parent, request.transmitter, *path);
    }
  }
  if (!path) {
    out.status = TransferStatus::NoPath;
    out.undeliverable = request.packets;
    return out;
  }

  const auto offered = static_cast<std::int64_t>(request.packets.size());
  AdmissionDecision decision = admit(state.budget, offered);
  if (!decision.overloaded()) {
    out.status = TransferStatus::Delivered;
    deliver_packets(request, request.packets, *path, out, net, state, cfg,
                    log);
    return out;
  }

  if (policy == OverloadPolicy::Wait) {
    // Nothing flows; give back what admission tentatively reserved.
    state.budget.remaining += decision.accepted;
    out.status = TransferStatus::Deferred;
    out.deferred = request.packets;
    return out;
  }

  // Prioritize: send the most important `accepted` packets now.
  std::vector<Packet> ordered = request.packets;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Packet& a, const Packet& b) {
                     return a.priority < b.priority;
                   });
  std::vector<Packet> chunk(ordered.begin(),
                            ordered.begin() + decision.accepted);
  std::vector<Packet> rest(ordered.begin() + decision.accepted, ordered.end());
  out.status = TransferStatus::Partial;
  if (!chunk.empty()) {
    deliver_packets(request, std::move(chunk), *path, out, net, state, cfg,
                    log);
    out.status = TransferStatus::Partial;
  } else {
    out.path_used = path;
  }
  if (cfg.prioritize_spill) {
    out.deferred = std::move(rest);
  } else {
    out.dropped = std::move(rest);
  }
  return out;
}

RefreshReport refresh_network(NetworkTopology& net, MemoryTable& table,
                              CycleState& state, const CycleConfig& cfg,
                              double now, DrainLog& log) {
  if (cfg.refresh_interval <= 0.0) {
    throw std::invalid_argument("refresh interval must be positive");
  }
  RefreshReport report;
  report.election = select_parent(net, state.cycle, now);
  state.parent = report.election.parent;
  state.parent_known = true;
  state.budget.nominal = net.node(state.parent).comm_capacity;
  state.budget.bandwidth_b = cfg.bandwidth;
  reset_capacity(state.budget, cfg.refresh_interval);
  state.cycle += 1;
  state.last_refresh_at = now;

  // Deferred requests re-enter ahead of new traffic, in FIFO order.
  std::deque<TransferRequest> waiting;
  waiting.swap(state.wait_queue);
  for (TransferRequest& req : waiting) {
    req.deferrals += 1;
    TransferOutcome outcome = submit_transfer(req, OverloadPolicy::Wait, net,
                                              table, state, cfg, log);
    if (outcome.status == TransferStatus::Deferred) {
      state.wait_queue.push_back(req);
    }
    report.replayed.emplace_back(std::move(req), std::move(outcome));
  }
  return report;
}

std::optional<double> transfer_delay(const TransferRequest& request,
                                     const TransferOutcome& outcome) {
  if (outcome.delivered.empty() || !outcome.delivered_at) {
    return std::nullopt;
  }
  double earliest = request.packets.front().created_at;
  for (const Packet& p : request.packets) {
    earliest = std::min(earliest, p.created_at);
  }
  return *outcome.delivered_at - earliest;
}

}  // namespace aedt
