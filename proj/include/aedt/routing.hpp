#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aedt/core.hpp"

namespace aedt {

/// Hop sequence from transmitter (front) to parent (back).
struct Path {
  std::vector<NodeId> hops;

  NodeId transmitter() const { return hops.front(); }
  NodeId parent() const { return hops.back(); }
  std::size_t hop_count() const { return hops.size() - 1; }

  /// Throws unless the path has length >= 2, repeats no node and steps
  /// only along topology edges.
  void validate(const NetworkTopology& net) const;

  bool operator==(const Path&) const = default;
};

/// Greedy energy-aware walk from source toward parent: step straight to
/// the parent as soon as it is a one-hop neighbor, otherwise to the
/// unvisited alive neighbor with the most available energy (ties to the
/// smaller id). Returns nullopt on a dead end; no backtracking.
std::optional<Path> path_select(const NetworkTopology& net, NodeId source,
                                NodeId parent);

/// Persistent (parent, transmitter) -> path cache. Entries whose hops
/// have died are evicted lazily at lookup.
class MemoryTable {
 public:
  std::optional<Path> lookup(const NetworkTopology& net, NodeId parent,
                             NodeId transmitter);
  void update(const NetworkTopology& net, NodeId parent, NodeId transmitter,
              Path path);

  std::size_t size() const { return entries_.size(); }
  void clear() { entries_.clear(); }

  /// One line per entry, `parent,transmitter,hop1>hop2>...`, sorted by
  /// (parent, transmitter).
  std::string dump() const;

 private:
  std::map<std::pair<NodeId, NodeId>, Path> entries_;
};

}  // namespace aedt
