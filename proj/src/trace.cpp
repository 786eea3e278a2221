#include "aedt/trace.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace aedt {

namespace {

constexpr std::array<std::string_view, 11> kKindNames = {
    "node",  "refresh", "submit", "deliver", "drop",         "defer",
    "undeliverable", "drain", "death", "cycle", "end"};

EventKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<EventKind>(i);
  }
  throw std::invalid_argument("unknown trace event kind: " + std::string(name));
}

double parse_double(std::string_view field) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("bad numeric field: " + std::string(field));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), ptr);
}

std::string format_event(const TraceEvent& event) {
  std::string out = format_double(event.time);
  out += ',';
  out += kKindNames[static_cast<std::size_t>(event.kind)];
  out += ',';
  out += std::to_string(event.actor);
  for (double a : event.args) {
    out += ',';
    out += format_double(a);
  }
  return out;
}

TraceEvent parse_event(std::string_view line) {
  auto fields = split(line);
  if (fields.size() < 3) {
    throw std::invalid_argument("trace line needs time,kind,actor");
  }
  TraceEvent e;
  e.time = parse_double(fields[0]);
  e.kind = kind_from_name(fields[1]);
  e.actor = static_cast<std::int64_t>(parse_double(fields[2]));
  for (std::size_t i = 3; i < fields.size(); ++i) {
    e.args.push_back(parse_double(fields[i]));
  }
  return e;
}

std::string format_trace(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const TraceEvent& e : trace) {
    out += format_event(e);
    out += '\n';
  }
  return out;
}

std::vector<TraceEvent> parse_trace(std::istream& in) {
  std::vector<TraceEvent> trace;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    trace.push_back(parse_event(line));
  }
  return trace;
}

std::vector<TraceEvent> parse_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_trace(in);
}

}  // namespace aedt
