#pragma once

#include <cstdint>
#include <vector>

namespace aedt {

/// Per-packet timing terms of the utilization sum. When t_i is not
/// supplied directly it is derived from p_i, the packet-size to
/// effective-bandwidth ratio.
struct PacketTiming {
  double t_i = 0.0;  // transmission time, seconds
  double d_i = 0.0;  // distance of the packet's node to the sink, meters
  double p_i = 0.0;  // packet size / effective bandwidth

  double transmission_time() const { return t_i > 0.0 ? t_i : p_i; }
};

/// Sum of T_i / D_i over the packet set.
double utilization(const std::vector<PacketTiming>& packets);

/// Bandwidth-scaled utilization ratio. Numerator utilizations and the
/// denominator packet set are supplied independently; when they describe
/// the same packets the ratio collapses to b.
double rtcc(double b, const std::vector<double>& numerator_utilizations,
            const std::vector<PacketTiming>& denominator_packets);

/// A node's packet budget for the current refresh cycle.
struct CapacityState {
  double nominal = 0.0;      // packets per second
  std::int64_t remaining = 0;  // packets left this cycle
  double bandwidth_b = 0.0;  // bits per second
};

struct AdmissionDecision {
  enum class Kind { Accept, Overload };
  Kind kind = Kind::Accept;
  std::int64_t accepted = 0;
  std::int64_t excess = 0;

  bool overloaded() const { return kind == Kind::Overload; }
};

/// Accept the whole offer if it fits the remaining budget, otherwise
/// report how many fit and how many are excess. The budget is consumed
/// by whatever was accepted.
AdmissionDecision admit(CapacityState& state, std::int64_t offered);

/// Renew the per-cycle budget: remaining = floor(nominal * interval).
void reset_capacity(CapacityState& state, double refresh_interval);

}  // namespace aedt
