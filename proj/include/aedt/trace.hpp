#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aedt {

/// Event kinds of the line-oriented run trace. Field order is stable;
/// fixture diffing depends on it.
enum class EventKind {
  Node,           // actor=id, args: x, y, e_avail, comm_capacity
  Refresh,        // actor=cycle, args: parent
  Submit,         // actor=source, args: count
  Deliver,        // actor=source, args: count, hops, delay_sum
  Drop,           // actor=source, args: count
  Defer,          // actor=source, args: count
  Undeliverable,  // actor=source, args: count
  Drain,          // actor=node, args: kind(0 txn/1 awake), requested, applied, clamped
  Death,          // actor=node
  CycleSummary,   // actor=cycle, args: parent, submitted, delivered, dropped,
                  //                    deferred, undeliverable, energy_total
  End,            // actor=-1, args: end_time
};

struct TraceEvent {
  double time = 0.0;
  EventKind kind = EventKind::Node;
  std::int64_t actor = -1;
  std::vector<double> args;

  bool operator==(const TraceEvent&) const = default;
};

std::string format_event(const TraceEvent& event);
TraceEvent parse_event(std::string_view line);

/// Whole trace as `time,kind,actor,args...` lines.
std::string format_trace(const std::vector<TraceEvent>& trace);
std::vector<TraceEvent> parse_trace(std::istream& in);
std::vector<TraceEvent> parse_trace(const std::string& text);

/// Shortest round-trip decimal rendering, locale independent.
std::string format_double(double v);

}  // namespace aedt
