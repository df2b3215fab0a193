#include "hyperline/line_graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hyperline/error.hpp"

namespace hyperline {

std::vector<NodePair> canonicalize_edges(std::vector<NodePair> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("line graph edge is a self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

LineGraph squeeze(std::span<const NodePair> edges, int s) {
  std::vector<NodeId> originals;
  originals.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    originals.push_back(u);
    originals.push_back(v);
  }
  std::sort(originals.begin(), originals.end());
  originals.erase(std::unique(originals.begin(), originals.end()), originals.end());

  IdMap map(std::move(originals));
  std::vector<NodePair> compact;
  compact.reserve(edges.size());
  for (const auto& [u, v] : edges) compact.emplace_back(map.compact_of(u), map.compact_of(v));

  LineGraph g;
  g.s = s;
  g.nodes.resize(map.size());
  for (NodeId i = 0; i < map.size(); ++i) g.nodes[i] = i;
  g.edges = canonicalize_edges(std::move(compact));
  g.id_map = std::move(map);
  return g;
}

void write_edge_list(std::ostream& out, const LineGraph& g, std::span<const std::int64_t> labels,
                     bool header) {
  if (header)
    out << "# s=" << g.s << " nodes=" << g.num_nodes() << " edges=" << g.num_edges() << "\n";
  if (labels.empty()) {
    for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
    return;
  }
  // Re-canonicalize in label space so output is invariant to internal IDs.
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  lines.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    std::int64_t a = labels[u], b = labels[v];
    lines.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [a, b] : lines) out << a << " " << b << "\n";
}

void write_id_map(std::ostream& out, const IdMap& map, std::span<const std::int64_t> labels) {
  for (NodeId i = 0; i < map.size(); ++i) {
    NodeId orig = map.original_of(i);
    out << i << " " << (labels.empty() ? static_cast<std::int64_t>(orig) : labels[orig]) << "\n";
  }
}

LineGraph read_edge_list(std::istream& in, int default_s) {
  std::vector<NodePair> edges;
  int s = default_s;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find("s=");
      if (pos != std::string::npos)
        std::from_chars(line.data() + pos + 2, line.data() + line.size(), s);
      continue;
    }
    NodeId u = 0, v = 0;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    auto r1 = std::from_chars(p, end, u);
    if (r1.ec != std::errc{})
      throw ParseError("line " + std::to_string(line_no) + ": malformed edge line", line_no);
    p = r1.ptr;
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, v);
    if (r2.ec != std::errc{})
      throw ParseError("line " + std::to_string(line_no) + ": malformed edge line", line_no);
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u),
                       line_no);
    edges.emplace_back(u, v);
  }

  LineGraph g;
  g.s = s;
  std::vector<NodeId> nodes;
  nodes.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    nodes.push_back(u);
    nodes.push_back(v);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  g.nodes = std::move(nodes);
  g.edges = canonicalize_edges(std::move(edges));
  return g;
}

}  // namespace hyperline
