#include "aedt/routing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aedt {

void Path::validate(const NetworkTopology& net) const {
  if (hops.size() < 2) {
    throw std::invalid_argument("path needs at least two hops");
  }
  std::set<NodeId> seen;
  for (NodeId h : hops) {
    if (h >= net.size()) {
      throw std::invalid_argument("path references unknown node");
    }
    if (!seen.insert(h).second) {
      throw std::invalid_argument("path repeats a node");
    }
  }
  for (std::size_t i = 0; i + 1 < hops.size(); ++i) {
    if (!net.connected(hops[i], hops[i + 1])) {
      throw std::invalid_argument("path steps outside the topology edges");
    }
  }
}

std::optional<Path> path_select(const NetworkTopology& net, NodeId source,
                                NodeId parent) {
  if (source == parent) {
    throw std::invalid_argument("source and parent must differ");
  }
  if (!net.node(source).alive() || !net.node(parent).alive()) {
    throw std::invalid_argument("source and parent must be alive");
  }

  Path path;
  path.hops.push_back(source);
  std::set<NodeId> visited{source};
  NodeId current = source;
  while (true) {
    if (net.connected(current, parent)) {
      path.hops.push_back(parent);
      path.validate(net);
      return path;
    }
    const SensorNode* best = nullptr;
    for (NodeId nbr : net.alive_neighbors(current)) {
      if (visited.count(nbr)) continue;
      const SensorNode& cand = net.node(nbr);
      if (best == nullptr || cand.e_avail > best->e_avail) best = &cand;
    }
    if (best == nullptr) return std::nullopt;  // dead end
    visited.insert(best->id);
    path.hops.push_back(best->id);
    current = best->id;
  }
}

std::optional<Path> MemoryTable::lookup(const NetworkTopology& net,
                                        NodeId parent, NodeId transmitter) {
  auto it = entries_.find({parent, transmitter});
  if (it == entries_.end()) return std::nullopt;
  for (NodeId h : it->second.hops) {
    if (!net.node(h).alive()) {
      entries_.erase(it);  // stale path, evict
      return std::nullopt;
    }
  }
  return it->second;
}

void MemoryTable::update(const NetworkTopology& net, NodeId parent,
                         NodeId transmitter, Path path) {
  path.validate(net);
  if (path.transmitter() != transmitter || path.parent() != parent) {
    throw std::invalid_argument("path endpoints do not match the table key");
  }
  entries_.insert_or_assign({parent, transmitter}, std::move(path));
}

std::string MemoryTable::dump() const {
  std::ostringstream out;
  for (const auto& [key, path] : entries_) {
    out << key.first << ',' << key.second << ',';
    for (std::size_t i = 0; i < path.hops.size(); ++i) {
      if (i > 0) out << '>';
      out << path.hops[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace aedt
