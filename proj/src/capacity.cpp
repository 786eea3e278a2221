#include "aedt/capacity.hpp"

#include <cmath>
#include <stdexcept>

namespace aedt {

double utilization(const std::vector<PacketTiming>& packets) {
  double sum = 0.0;
  for (const PacketTiming& p : packets) {
    if (p.d_i <= 0.0) {
      throw std::invalid_argument("packet distance must be positive");
    }
    sum += p.transmission_time() / p.d_i;
  }
  return sum;
}

double rtcc(double b, const std::vector<double>& numerator_utilizations,
            const std::vector<PacketTiming>& denominator_packets) {
  const double denom = utilization(denominator_packets);
  if (denom <= 0.0) {
    throw std::invalid_argument("rtcc denominator must be positive");
  }
  double numer = 0.0;
  for (double u : numerator_utilizations) numer += u;
  return b * numer / denom;
}

AdmissionDecision admit(CapacityState& state, std::int64_t offered) {
  if (offered < 0) {
    throw std::invalid_argument("offered packet count must be >= 0");
  }
  AdmissionDecision d;
  if (offered <= state.remaining) {
    d.kind = AdmissionDecision::Kind::Accept;
    d.accepted = offered;
    d.excess = 0;
    state.remaining -= offered;
  } else {
    d.kind = AdmissionDecision::Kind::Overload;
    d.accepted = state.remaining;
    d.excess = offered - state.remaining;
    state.remaining = 0;
  }
  return d;
}

void reset_capacity(CapacityState& state, double refresh_interval) {
  if (refresh_interval <= 0.0) {
    throw std::invalid_argument("refresh interval must be positive");
  }
  state.remaining =
      static_cast<std::int64_t>(std::floor(state.nominal * refresh_interval));
}

}  // namespace aedt
