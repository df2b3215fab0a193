#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperline/line_graph.hpp"

namespace hyperline::detail {

// Contiguous-index adjacency over g.nodes; node IDs in a LineGraph may be
// sparse (original hyperedge IDs), so metrics work in index space and map
// back at the boundary.
struct GraphView {
  const LineGraph* g = nullptr;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> neighbors;

  explicit GraphView(const LineGraph& graph) : g(&graph) {
    const std::size_t k = graph.nodes.size();
    offsets.assign(k + 1, 0);
    for (const auto& [u, v] : graph.edges) {
      ++offsets[index_of(u) + 1];
      ++offsets[index_of(v) + 1];
    }
    for (std::size_t i = 0; i < k; ++i) offsets[i + 1] += offsets[i];
    neighbors.resize(offsets.back());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : graph.edges) {
      std::uint32_t a = index_of(u), b = index_of(v);
      neighbors[cursor[a]++] = b;
      neighbors[cursor[b]++] = a;
    }
  }

  std::size_t size() const { return g->nodes.size(); }

  std::uint32_t index_of(NodeId id) const {
    auto it = std::lower_bound(g->nodes.begin(), g->nodes.end(), id);
    if (it == g->nodes.end() || *it != id)
      throw std::invalid_argument("node id " + std::to_string(id) + " not in line graph");
    return static_cast<std::uint32_t>(it - g->nodes.begin());
  }

  NodeId id_of(std::uint32_t index) const { return g->nodes[index]; }

  std::span<const std::uint32_t> adjacent(std::uint32_t index) const {
    return {neighbors.data() + offsets[index], neighbors.data() + offsets[index + 1]};
  }

  std::uint32_t degree(std::uint32_t index) const {
    return static_cast<std::uint32_t>(offsets[index + 1] - offsets[index]);
  }
};

}  // namespace hyperline::detail
