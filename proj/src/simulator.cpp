#include "aedt/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace aedt {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Shared run bookkeeping: trace emission, drain flushing, counters.
struct Engine {
  const ScenarioConfig& cfg;
  NetworkTopology net;
  DrainLog log;
  std::vector<TraceEvent> trace;
  std::vector<bool> death_emitted;
  std::size_t flushed = 0;  // drain log entries already traced

  std::uint64_t submitted_c = 0, delivered_c = 0, dropped_c = 0,
                deferred_c = 0, undeliverable_c = 0;

  Engine(const ScenarioConfig& c, NetworkTopology n)
      : cfg(c), net(std::move(n)), death_emitted(net.size(), false) {}

  void emit(double time, EventKind kind, std::int64_t actor,
            std::vector<double> args = {}) {
    trace.push_back({time, kind, actor, std::move(args)});
  }

  void flush_drains() {
    for (; flushed < log.size(); ++flushed) {
      const DrainEntry& e = log[flushed];
      emit(e.time, EventKind::Drain, e.node,
           {static_cast<double>(static_cast<int>(e.kind)), e.requested,
            e.applied, e.clamped ? 1.0 : 0.0});
      if (e.remaining == 0.0 && !death_emitted[e.node]) {
        death_emitted[e.node] = true;
        emit(e.time, EventKind::Death, e.node);
      }
    }
  }

  double energy_total() const {
    double sum = 0.0;
    for (const SensorNode& n : net.nodes()) sum += n.e_avail;
    return sum;
  }

  void emit_outcome(double time, const TransferRequest& request,
                    const TransferOutcome& outcome) {
    if (!outcome.delivered.empty()) {
      double delay_sum = 0.0;
      for (const Packet& p : outcome.delivered) {
        delay_sum += *outcome.delivered_at - p.created_at;
      }
      const double hops =
          outcome.path_used ? static_cast<double>(outcome.path_used->hop_count())
                            : 0.0;
      emit(time, EventKind::Deliver, request.transmitter,
           {static_cast<double>(outcome.delivered.size()), hops, delay_sum});
      delivered_c += outcome.delivered.size();
    }
    if (!outcome.dropped.empty()) {
      emit(time, EventKind::Drop, request.transmitter,
           {static_cast<double>(outcome.dropped.size())});
      dropped_c += outcome.dropped.size();
    }
    if (!outcome.deferred.empty()) {
      emit(time, EventKind::Defer, request.transmitter,
           {static_cast<double>(outcome.deferred.size())});
      deferred_c += outcome.deferred.size();
    }
    if (!outcome.undeliverable.empty()) {
      emit(time, EventKind::Undeliverable, request.transmitter,
           {static_cast<double>(outcome.undeliverable.size())});
      undeliverable_c += outcome.undeliverable.size();
    }
    flush_drains();
  }

  void emit_cycle_summary(double time, std::uint64_t cycle,
                          std::int64_t parent) {
    emit(time, EventKind::CycleSummary, static_cast<std::int64_t>(cycle),
         {static_cast<double>(parent), static_cast<double>(submitted_c),
          static_cast<double>(delivered_c), static_cast<double>(dropped_c),
          static_cast<double>(deferred_c),
          static_cast<double>(undeliverable_c), energy_total()});
    submitted_c = delivered_c = dropped_c = deferred_c = undeliverable_c = 0;
  }
};

/// Hop-count shortest routes toward a fixed aggregator, computed once.
struct StaticRoutes {
  NodeId aggregator = 0;
  std::vector<std::int64_t> next_hop;  // toward aggregator, -1 = unreachable
  bool disconnected = false;
};

StaticRoutes build_static_routes(const NetworkTopology& net) {
  StaticRoutes routes;
  routes.next_hop.assign(net.size(), -1);

  // Aggregator: alive node nearest the area centroid of the deployment.
  double cx = 0.0, cy = 0.0;
  for (const SensorNode& n : net.nodes()) {
    cx += n.pos.x;
    cy += n.pos.y;
  }
  cx /= static_cast<double>(net.size());
  cy /= static_cast<double>(net.size());
  double best_d = std::numeric_limits<double>::infinity();
  for (const SensorNode& n : net.nodes()) {
    if (!n.alive()) continue;
    const double d = std::hypot(n.pos.x - cx, n.pos.y - cy);
    if (d < best_d) {
      best_d = d;
      routes.aggregator = n.id;
    }
  }

  std::queue<NodeId> frontier;
  std::vector<bool> seen(net.size(), false);
  frontier.push(routes.aggregator);
  seen[routes.aggregator] = true;
  while (!frontier.empty()) {
    NodeId cur = frontier.front();
    frontier.pop();
    for (NodeId nbr : net.neighbors(cur)) {
      if (seen[nbr] || !net.node(nbr).alive()) continue;
      seen[nbr] = true;
      routes.next_hop[nbr] = cur;
      frontier.push(nbr);
    }
  }
  for (const SensorNode& n : net.nodes()) {
    if (n.alive() && !seen[n.id]) routes.disconnected = true;
  }
  return routes;
}

/// StaticTree transfer: fixed route, same admission gate and drains, no
/// route repair when a hop dies.
TransferOutcome static_submit(const TransferRequest& request,
                              OverloadPolicy policy, Engine& eng,
                              const StaticRoutes& routes, CycleState& state,
                              const CycleConfig& ccfg) {
  TransferOutcome out;
  if (!eng.net.node(request.transmitter).alive()) {
    out.status = TransferStatus::TransmitterDead;
    out.undeliverable = request.packets;
    return out;
  }
  if (request.transmitter == routes.aggregator) {
    out.status = TransferStatus::Delivered;
    out.delivered = request.packets;
    out.delivered_at =
        request.submitted_at + request.deferrals * ccfg.refresh_interval;
    return out;
  }
  if (!eng.net.node(routes.aggregator).alive()) {
    out.status = TransferStatus::ParentDown;
    out.undeliverable = request.packets;
    return out;
  }

  Path path;
  path.hops.push_back(request.transmitter);
  std::int64_t cur = request.transmitter;
  bool broken = false;
  while (cur != static_cast<std::int64_t>(routes.aggregator)) {
    cur = routes.next_hop[static_cast<std::size_t>(cur)];
    if (cur < 0 || !eng.net.node(static_cast<NodeId>(cur)).alive()) {
      broken = true;
      break;
    }
    path.hops.push_back(static_cast<NodeId>(cur));
  }
  if (broken) {
    out.status = TransferStatus::NoPath;
    out.undeliverable = request.packets;
    return out;
  }

  const auto offered = static_cast<std::int64_t>(request.packets.size());
  AdmissionDecision decision = admit(state.budget, offered);
  auto deliver = [&](std::vector<Packet> packets) {
    const double now = request.deferrals > 0 ? state.last_refresh_at
                                             : request.submitted_at;
    out.delivered = std::move(packets);
    out.path_used = path;
    out.delivered_at =
        request.submitted_at + request.deferrals * ccfg.refresh_interval +
        static_cast<double>(path.hop_count()) * ccfg.hop_latency;
    std::vector<NodeId> mids(path.hops.begin() + 1, path.hops.end() - 1);
    apply_transaction_drain(ccfg.drains, routes.aggregator,
                            request.transmitter, mids, eng.net, eng.log, now);
  };
  if (!decision.overloaded()) {
    out.status = TransferStatus::Delivered;
    deliver(request.packets);
    return out;
  }
  if (policy == OverloadPolicy::Wait) {
    state.budget.remaining += decision.accepted;
    out.status = TransferStatus::Deferred;
    out.deferred = request.packets;
    return out;
  }
  std::vector<Packet> ordered = request.packets;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Packet& a, const Packet& b) {
                     return a.priority < b.priority;
                   });
  out.status = TransferStatus::Partial;
  if (decision.accepted > 0) {
    deliver({ordered.begin(), ordered.begin() + decision.accepted});
  } else {
    out.path_used = path;
  }
  if (ccfg.prioritize_spill) {
    out.deferred.assign(ordered.begin() + decision.accepted, ordered.end());
  } else {
    out.dropped.assign(ordered.begin() + decision.accepted, ordered.end());
  }
  return out;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (node_count < 2) throw std::invalid_argument("need at least 2 nodes");
  if (area_w <= 0.0 || area_h <= 0.0)
    throw std::invalid_argument("area must be positive");
  if (radio_range <= 0.0)
    throw std::invalid_argument("radio range must be positive");
  if (initial_energy <= 0.0)
    throw std::invalid_argument("initial energy must be positive");
  if (comm_capacity <= 0.0)
    throw std::invalid_argument("comm capacity must be positive");
  if (refresh_interval <= 0.0)
    throw std::invalid_argument("refresh interval must be positive");
  if (duration <= 0.0) throw std::invalid_argument("duration must be positive");
  if (traffic.rate < 0.0 || traffic.burst < 0 || traffic.sources < 0)
    throw std::invalid_argument("traffic parameters must be non-negative");
  if (traffic.packet_size_bits <= 0.0)
    throw std::invalid_argument("packet size must be positive");
  if (bandwidth <= 0.0) throw std::invalid_argument("bandwidth must be positive");
  if (hop_latency < 0.0)
    throw std::invalid_argument("hop latency must be non-negative");
  if (drains.unit_drain < 0.0 || drains.alpha < 0.0)
    throw std::invalid_argument("drain coefficients must be non-negative");
}

std::vector<NodeSpec> place_nodes(const ScenarioConfig& config,
                                  std::mt19937_64& rng) {
  std::vector<NodeSpec> specs;
  specs.reserve(static_cast<std::size_t>(config.node_count));
  for (int i = 0; i < config.node_count; ++i) {
    NodeSpec s;
    s.pos.x = uniform01(rng) * config.area_w;
    s.pos.y = uniform01(rng) * config.area_h;
    s.initial_energy = config.initial_energy;
    s.comm_capacity = config.comm_capacity;
    specs.push_back(s);
  }
  return specs;
}

std::vector<TrafficEvent> generate_traffic(const ScenarioConfig& config,
                                           std::size_t node_count,
                                           std::mt19937_64& rng) {
  // Seeded Fisher-Yates pick of the CBR sources.
  std::vector<NodeId> ids(node_count);
  for (std::size_t i = 0; i < node_count; ++i) ids[i] = static_cast<NodeId>(i);
  for (std::size_t i = node_count - 1; i > 0; --i) {
    const std::size_t j = rng() % (i + 1);
    std::swap(ids[i], ids[j]);
  }
  const std::size_t n_sources = std::min<std::size_t>(
      static_cast<std::size_t>(config.traffic.sources), node_count);
  std::vector<NodeId> sources(ids.begin(), ids.begin() + n_sources);
  std::sort(sources.begin(), sources.end());

  std::vector<TrafficEvent> events;
  if (config.traffic.rate > 0.0 && config.traffic.burst > 0) {
    for (NodeId src : sources) {
      for (int k = 1;; ++k) {
        const double t = static_cast<double>(k) / config.traffic.rate;
        if (t >= config.duration) break;
        events.push_back({t, src, {}});
      }
    }
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const TrafficEvent& a, const TrafficEvent& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.source < b.source;
                   });
  for (TrafficEvent& ev : events) {
    ev.priorities.resize(static_cast<std::size_t>(config.traffic.burst));
    for (int& p : ev.priorities) p = static_cast<int>(rng() % 10);
  }
  return events;
}

RunResult run_scenario(const ScenarioConfig& config,
                       const std::vector<NodeSpec>& specs,
                       const std::vector<TrafficEvent>& traffic) {
  config.validate();
  Engine eng(config, NetworkTopology::build(specs, config.radio_range));

  CycleConfig ccfg;
  ccfg.refresh_interval = config.refresh_interval;
  ccfg.hop_latency = config.hop_latency;
  ccfg.bandwidth = config.bandwidth;
  ccfg.drains = config.drains;
  ccfg.overload = config.overload;
  ccfg.path_cache = config.path_cache;
  ccfg.prioritize_spill = config.prioritize_spill;
  ccfg.sleep_enabled = config.protocol == Protocol::Aedt;

  RunResult result;
  result.initial_total_energy = eng.energy_total();

  for (const SensorNode& n : eng.net.nodes()) {
    eng.emit(0.0, EventKind::Node, n.id,
             {n.pos.x, n.pos.y, n.e_avail, n.comm_capacity});
  }

  MemoryTable table;
  CycleState cs;
  StaticRoutes routes;
  const bool static_tree = config.protocol == Protocol::StaticTree;
  if (static_tree) {
    routes = build_static_routes(eng.net);
    result.static_tree_disconnected = routes.disconnected;
  }

  const double t = config.refresh_interval;
  std::uint64_t seq = 0;
  std::size_t next_event = 0;
  double end_time = config.duration;
  bool network_dead = false;

  auto wake_everyone = [&](double now) {
    for (SensorNode& n : eng.net.nodes()) {
      if (!n.alive()) continue;
      n.state = NodeState::Awake;
      if (n.awake_since < 0.0) n.awake_since = now;
    }
  };

  auto do_submit = [&](const TransferRequest& req) {
    return static_tree
               ? static_submit(req, config.overload, eng, routes, cs, ccfg)
               : submit_transfer(req, config.overload, eng.net, table, cs,
                                 ccfg, eng.log);
  };

  for (std::uint64_t k = 0;; ++k) {
    const double cycle_start = static_cast<double>(k) * t;
    if (cycle_start >= config.duration) break;
    const double cycle_end =
        std::min(cycle_start + t, config.duration);

    // Refresh: elect (or keep) the aggregator, renew budgets, replay the
    // wait queue ahead of new traffic.
    if (static_tree) {
      if (eng.net.alive_count() == 0) {
        network_dead = true;
        end_time = cycle_start;
        break;
      }
      cs.parent = routes.aggregator;
      cs.parent_known = true;
      cs.budget.nominal = eng.net.node(routes.aggregator).comm_capacity;
      cs.budget.bandwidth_b = config.bandwidth;
      reset_capacity(cs.budget, t);
      cs.cycle = k + 1;
      cs.last_refresh_at = cycle_start;
      wake_everyone(cycle_start);
      eng.emit(cycle_start, EventKind::Refresh, static_cast<std::int64_t>(k),
               {static_cast<double>(routes.aggregator)});
      std::deque<TransferRequest> waiting;
      waiting.swap(cs.wait_queue);
      for (TransferRequest& req : waiting) {
        req.deferrals += 1;
        TransferOutcome outcome = static_submit(req, OverloadPolicy::Wait,
                                                eng, routes, cs, ccfg);
        if (outcome.status == TransferStatus::Deferred) {
          cs.wait_queue.push_back(req);
        }
        eng.emit_outcome(cycle_start, req, outcome);
      }
    } else {
      RefreshReport report;
      try {
        report = refresh_network(eng.net, table, cs, ccfg, cycle_start,
                                 eng.log);
      } catch (const NetworkDeadError&) {
        network_dead = true;
        end_time = cycle_start;
        break;
      }
      eng.emit(cycle_start, EventKind::Refresh, static_cast<std::int64_t>(k),
               {static_cast<double>(report.election.parent)});
      if (config.protocol == Protocol::AedtNoSleep) {
        wake_everyone(cycle_start);
      }
      for (const auto& [req, outcome] : report.replayed) {
        eng.emit_outcome(cycle_start, req, outcome);
      }
    }

    // Traffic that lands in this cycle.
    while (next_event < traffic.size() &&
           traffic[next_event].time < cycle_end) {
      const TrafficEvent& ev = traffic[next_event];
      ++next_event;
      if (!eng.net.node(ev.source).alive()) continue;  // dead sources idle
      TransferRequest req;
      req.transmitter = ev.source;
      req.submitted_at = ev.time;
      for (int p : ev.priorities) {
        Packet pkt;
        pkt.seq = seq++;
        pkt.source = ev.source;
        pkt.created_at = ev.time;
        pkt.size_bits = config.traffic.packet_size_bits;
        pkt.priority = p;
        req.packets.push_back(pkt);
      }
      if (req.packets.empty()) continue;
      eng.emit(ev.time, EventKind::Submit, ev.source,
               {static_cast<double>(req.packets.size())});
      eng.submitted_c += req.packets.size();
      TransferOutcome outcome = do_submit(req);
      if (outcome.status == TransferStatus::Deferred ||
          (!outcome.deferred.empty() && config.prioritize_spill)) {
        TransferRequest leftover = req;
        leftover.packets = outcome.deferred;
        cs.wait_queue.push_back(std::move(leftover));
      }
      eng.emit_outcome(ev.time, req, outcome);
    }

    // Awake drains for the interval: the parent is up the whole cycle;
    // with sleep disabled every alive node is.
    const double interval = cycle_end - cycle_start;
    if (ccfg.sleep_enabled) {
      if (cs.parent_known && eng.net.node(cs.parent).alive()) {
        apply_awake_drain(config.drains, cs.parent, interval, eng.net,
                          eng.log, cycle_end);
      }
    } else {
      for (const SensorNode& n : eng.net.nodes()) {
        if (n.alive()) {
          apply_awake_drain(config.drains, n.id, interval, eng.net, eng.log,
                            cycle_end);
        }
      }
    }
    eng.flush_drains();
    eng.emit_cycle_summary(cycle_end, k,
                           cs.parent_known
                               ? static_cast<std::int64_t>(cs.parent)
                               : -1);

    if (eng.net.alive_count() == 0) {
      network_dead = true;
      end_time = cycle_end;
      break;
    }
  }

  (void)network_dead;
  eng.emit(end_time, EventKind::End, -1, {end_time});

  result.metrics = collect_metrics(eng.trace);
  result.trace = std::move(eng.trace);
  result.network = std::move(eng.net);
  result.drains = std::move(eng.log);
  return result;
}

RunResult run(const ScenarioConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::vector<NodeSpec> specs = place_nodes(config, rng);
  std::vector<TrafficEvent> traffic =
      generate_traffic(config, specs.size(), rng);
  return run_scenario(config, specs, traffic);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t node_count) {
  return splitmix64(base_seed ^ splitmix64(node_count));
}

std::vector<RunResult> sweep(const ScenarioConfig& base,
                             const std::vector<int>& node_counts) {
  if (node_counts.empty()) {
    throw std::invalid_argument("sweep needs at least one node count");
  }
  std::vector<RunResult> results;
  results.reserve(node_counts.size());
  for (int count : node_counts) {
    ScenarioConfig cfg = base;
    cfg.node_count = count;
    cfg.seed = derive_seed(base.seed, static_cast<std::uint64_t>(count));
    results.push_back(run(cfg));
  }
  return results;
}

MetricsRecord collect_metrics(const std::vector<TraceEvent>& trace) {
  MetricsRecord m;
  std::uint64_t node_count = 0;
  double delay_sum = 0.0;
  double drain_sum = 0.0;
  double first_death = -1.0;
  double end_time = 0.0;
  for (const TraceEvent& e : trace) {
    switch (e.kind) {
      case EventKind::Node:
        ++node_count;
        break;
      case EventKind::Submit:
        m.submitted += static_cast<std::uint64_t>(e.args.at(0));
        break;
      case EventKind::Deliver:
        m.delivered += static_cast<std::uint64_t>(e.args.at(0));
        delay_sum += e.args.at(2);
        break;
      case EventKind::Drain:
        drain_sum += e.args.at(2);
        break;
      case EventKind::Death:
        if (first_death < 0.0) first_death = e.time;
        break;
      case EventKind::CycleSummary: {
        CycleSnapshot snap;
        snap.cycle = static_cast<std::uint64_t>(e.actor);
        snap.parent = static_cast<std::int64_t>(e.args.at(0));
        snap.submitted = static_cast<std::uint64_t>(e.args.at(1));
        snap.delivered = static_cast<std::uint64_t>(e.args.at(2));
        snap.dropped = static_cast<std::uint64_t>(e.args.at(3));
        snap.deferred = static_cast<std::uint64_t>(e.args.at(4));
        snap.undeliverable = static_cast<std::uint64_t>(e.args.at(5));
        snap.energy_total = e.args.at(6);
        m.per_cycle.push_back(snap);
        break;
      }
      case EventKind::End:
        end_time = e.time;
        break;
      default:
        break;
    }
  }
  m.avg_delay = m.delivered > 0
                    ? delay_sum / static_cast<double>(m.delivered)
                    : 0.0;
  m.delivery_ratio = m.submitted > 0 ? static_cast<double>(m.delivered) /
                                           static_cast<double>(m.submitted)
                                     : 1.0;
  m.avg_energy_consumed =
      node_count > 0 ? drain_sum / static_cast<double>(node_count) : 0.0;
  m.network_lifetime = first_death >= 0.0 ? first_death : end_time;
  return m;
}

}  // namespace aedt
