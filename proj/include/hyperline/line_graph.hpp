#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperline/id_map.hpp"

namespace hyperline {

using NodePair = std::pair<NodeId, NodeId>;

// Undirected simple graph over hyperedge IDs. Edges are canonical: u < v,
// stored sorted lexicographically, each unordered pair once, no self-loops.
// Construction algorithms return graphs whose node IDs are hyperedge IDs of
// the source hypergraph (id_map empty = identity); squeeze() compacts the IDs
// and fills id_map with compact -> original.
struct LineGraph {
  int s = 1;
  std::vector<NodeId> nodes;   // sorted ascending; all of E_s unless squeezed
  std::vector<NodePair> edges; // canonical
  IdMap id_map;                // empty means identity

  NodeId num_nodes() const { return static_cast<NodeId>(nodes.size()); }
  std::size_t num_edges() const { return edges.size(); }

  NodeId original_of(NodeId node) const {
    return id_map.empty() ? node : id_map.original_of(node);
  }

  bool operator==(const LineGraph&) const = default;
};

// Sorts, dedups and self-loop-checks a raw pair list into canonical form.
std::vector<NodePair> canonicalize_edges(std::vector<NodePair> edges);

// Compacts the sparse endpoint IDs of `edges` to 0..k-1 in ascending original
// order. Only endpoints survive; nodes isolated in the source graph drop out.
LineGraph squeeze(std::span<const NodePair> edges, int s = 0);

// Text edge list: optional `# s=<s> nodes=<k> edges=<|F|>` header, then one
// `<u> <v>` line per edge with u < v, sorted. `labels`, when given, maps node
// IDs to the written values (must cover every node).
void write_edge_list(std::ostream& out, const LineGraph& g,
                     std::span<const std::int64_t> labels = {}, bool header = true);

// IdMap sidecar: `<compact_id> <original_id>` lines.
void write_id_map(std::ostream& out, const IdMap& map, std::span<const std::int64_t> labels = {});

// Reads the write_edge_list format. Nodes are the distinct endpoints; the
// header's s value is honored when present, else `default_s`.
LineGraph read_edge_list(std::istream& in, int default_s = 1);

}  // namespace hyperline
