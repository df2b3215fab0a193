#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hyperline/build.hpp"
#include "hyperline/hypergraph.hpp"
#include "hyperline/line_graph.hpp"
#include "hyperline/workload_stats.hpp"

namespace hyperline::detail {

inline void require_valid_s(int s) {
  if (s < 1) throw std::invalid_argument("s-line graph threshold must be >= 1");
}

// E_s: edges of size >= s, ascending. s >= 1 keeps empty edges out everywhere.
inline std::vector<NodeId> edges_of_min_size(const Hypergraph& h, int s) {
  std::vector<NodeId> nodes;
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    if (h.edge_size(e) >= static_cast<std::uint32_t>(s)) nodes.push_back(e);
  return nodes;
}

// Concatenates per-worker buffers and canonicalizes. Duplicates cannot occur
// under the one-direction rule; canonicalize_edges dedups anyway so an
// instrumentation bug cannot silently corrupt output.
inline LineGraph finalize_linegraph(const Hypergraph& h, int s,
                                    std::vector<std::vector<NodePair>> buffers) {
  LineGraph g;
  g.s = s;
  g.nodes = edges_of_min_size(h, s);
  std::size_t total = 0;
  for (const auto& b : buffers) total += b.size();
  std::vector<NodePair> all;
  all.reserve(total);
  for (auto& b : buffers) all.insert(all.end(), b.begin(), b.end());
  g.edges = canonicalize_edges(std::move(all));
  return g;
}

inline void publish_stats(const BuildOptions& opts, WorkloadStats&& local) {
  if (opts.stats) *opts.stats = std::move(local);
}

}  // namespace hyperline::detail
