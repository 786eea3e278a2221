#pragma once

#include <cstdint>
#include <vector>

#include "aedt/core.hpp"

namespace aedt {

struct TraceSample {
  double t = 0.0;
  double value = 0.0;
};

/// Piecewise-linear sampled signal over time. Times must be strictly
/// increasing and values non-negative. Queries outside the sampled span
/// are rejected.
class SampledTrace {
 public:
  explicit SampledTrace(std::vector<TraceSample> samples);

  /// Linear interpolation between the surrounding samples.
  double value_at(double t) const;

  /// Trapezoidal integral over [t1, t2], exact for the piecewise-linear
  /// signal the samples describe.
  double integrate(double t1, double t2) const;

  const std::vector<TraceSample>& samples() const { return samples_; }

 private:
  void require_covered(double t1, double t2) const;

  std::vector<TraceSample> samples_;
};

using BatteryTrace = SampledTrace;  // joules over time
using PowerTrace = SampledTrace;    // watts over time

/// Voltage measured across a test resistance R fed from v_in.
struct VoltageProbe {
  double v_in = 0.0;  // volts
  double r = 0.0;     // ohms
  SampledTrace v_r;   // volts over time
};

/// Linear network-consumption estimate: m * size + b.
struct NetworkEnergyModel {
  double m = 0.0;  // joules per node
  double b = 0.0;  // joules
};

/// The two drain rules: one unit per transaction for every node touching
/// a transfer, and an awake-time-proportional drain for any node holding
/// its radio up. Either can be zeroed for ablations.
struct DrainPolicy {
  double unit_drain = 1.0;  // joules per transaction
  double alpha = 0.01;      // joules per awake second
};

enum class DrainKind : int { Transaction = 0, Awake = 1 };

struct DrainEntry {
  double time = 0.0;
  NodeId node = 0;
  DrainKind kind = DrainKind::Transaction;
  double requested = 0.0;
  double applied = 0.0;  // differs from requested only when clamped at zero
  double remaining = 0.0;  // node energy after the drain
  bool clamped = false;
};

using DrainLog = std::vector<DrainEntry>;

/// E_avail = E_b(t2) - E_b(t1) + integral of P_c over [t1, t2].
double available_energy(const BatteryTrace& battery, const PowerTrace& power,
                        double t1, double t2);

/// P_c = k * p_t / d^alpha_exp, alpha_exp in [2, 4].
double power_consumption(double p_t, double d, double alpha_exp,
                         double k = 1.0);

/// E_con = (v_in / r) * integral of v_r over [t0, t1].
double node_energy_consumed(const VoltageProbe& probe, double t0, double t1);

double network_energy_estimate(const NetworkEnergyModel& model,
                               std::size_t size);

/// Charge parent, transmitter and every intermediate one unit each,
/// clamped at zero. Every drain (including clamps) lands in the log so
/// the conservation audit reconciles exactly.
void apply_transaction_drain(const DrainPolicy& policy, NodeId parent,
                             NodeId transmitter,
                             const std::vector<NodeId>& intermediates,
                             NetworkTopology& net, DrainLog& log, double now);

/// Charge one node alpha * awake_duration, clamped at zero.
void apply_awake_drain(const DrainPolicy& policy, NodeId node,
                       double awake_duration, NetworkTopology& net,
                       DrainLog& log, double now);

double drained_total(const DrainLog& log);

}  // namespace aedt
