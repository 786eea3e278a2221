#include "aedt/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace aedt {

SampledTrace::SampledTrace(std::vector<TraceSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) {
    throw std::invalid_argument("trace needs at least one sample");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i].value < 0.0 || !std::isfinite(samples_[i].value)) {
      throw std::invalid_argument("trace values must be finite and >= 0");
    }
    if (i > 0 && samples_[i].t <= samples_[i - 1].t) {
      throw std::invalid_argument("trace times must be strictly increasing");
    }
  }
}

void SampledTrace::require_covered(double t1, double t2) const {
  if (t1 < samples_.front().t || t2 > samples_.back().t) {
    throw std::invalid_argument("trace does not cover the requested interval");
  }
}

double SampledTrace::value_at(double t) const {
  require_covered(t, t);
  if (samples_.size() == 1) return samples_.front().value;
  // First sample with time >= t.
  std::size_t hi = 0;
  while (samples_[hi].t < t) ++hi;
  if (samples_[hi].t == t) return samples_[hi].value;
  const TraceSample& a = samples_[hi - 1];
  const TraceSample& b = samples_[hi];
  const double w = (t - a.t) / (b.t - a.t);
  return a.value + w * (b.value - a.value);
}

double SampledTrace::integrate(double t1, double t2) const {
  if (t1 >= t2) {
    throw std::invalid_argument("integration interval must have t1 < t2");
  }
  require_covered(t1, t2);
  double total = 0.0;
  double prev_t = t1;
  double prev_v = value_at(t1);
  for (const TraceSample& s : samples_) {
    if (s.t <= t1) continue;
    if (s.t >= t2) break;
    total += 0.5 * (prev_v + s.value) * (s.t - prev_t);
    prev_t = s.t;
    prev_v = s.value;
  }
  total += 0.5 * (prev_v + value_at(t2)) * (t2 - prev_t);
  return total;
}

double available_energy(const BatteryTrace& battery, const PowerTrace& power,
                        double t1, double t2) {
  if (t1 >= t2) {
    throw std::invalid_argument("available_energy requires t1 < t2");
  }
  return battery.value_at(t2) - battery.value_at(t1) + power.integrate(t1, t2);
}

double power_consumption(double p_t, double d, double alpha_exp, double k) {
  if (d <= 0.0) {
    throw std::invalid_argument("distance must be positive");
  }
  if (alpha_exp < 2.0 || alpha_exp > 4.0) {
    throw std::invalid_argument("path-loss exponent must lie in [2, 4]");
  }
  if (k <= 0.0) {
    throw std::invalid_argument("proportionality constant must be positive");
  }
  return k * p_t / std::pow(d, alpha_exp);
}

double node_energy_consumed(const VoltageProbe& probe, double t0, double t1) {
  if (probe.r <= 0.0 || probe.v_in <= 0.0) {
    throw std::invalid_argument("probe needs positive v_in and resistance");
  }
  if (t0 >= t1) {
    throw std::invalid_argument("node_energy_consumed requires t0 < t1");
  }
  return probe.v_in / probe.r * probe.v_r.integrate(t0, t1);
}

double network_energy_estimate(const NetworkEnergyModel& model,
                               std::size_t size) {
  return model.m * static_cast<double>(size) + model.b;
}

namespace {

void drain_one(NodeId id, double requested, DrainKind kind,
               NetworkTopology& net, DrainLog& log, double now) {
  SensorNode& n = net.node(id);
  DrainEntry e;
  e.time = now;
  e.node = id;
  e.kind = kind;
  e.requested = requested;
  if (requested >= n.e_avail) {
    e.applied = n.e_avail;
    e.clamped = requested > n.e_avail;
    n.e_avail = 0.0;
  } else {
    e.applied = requested;
    n.e_avail -= requested;
  }
  e.remaining = n.e_avail;
  log.push_back(e);
}

}  // namespace

void apply_transaction_drain(const DrainPolicy& policy, NodeId parent,
                             NodeId transmitter,
                             const std::vector<NodeId>& intermediates,
                             NetworkTopology& net, DrainLog& log, double now) {
  if (policy.unit_drain < 0.0) {
    throw std::invalid_argument("unit drain must be >= 0");
  }
  drain_one(parent, policy.unit_drain, DrainKind::Transaction, net, log, now);
  drain_one(transmitter, policy.unit_drain, DrainKind::Transaction, net, log,
            now);
  for (NodeId hop : intermediates) {
    drain_one(hop, policy.unit_drain, DrainKind::Transaction, net, log, now);
  }
}

void apply_awake_drain(const DrainPolicy& policy, NodeId node,
                       double awake_duration, NetworkTopology& net,
                       DrainLog& log, double now) {
  if (awake_duration < 0.0) {
    throw std::invalid_argument("awake duration must be >= 0");
  }
  drain_one(node, policy.alpha * awake_duration, DrainKind::Awake, net, log,
            now);
}

double drained_total(const DrainLog& log) {
  double total = 0.0;
  for (const DrainEntry& e : log) total += e.applied;
  return total;
}

}  // namespace aedt
