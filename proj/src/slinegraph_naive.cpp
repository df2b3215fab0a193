#include "build_common.hpp"

namespace hyperline {

namespace {

std::uint32_t intersection_size(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::uint32_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

LineGraph slinegraph_naive(const Hypergraph& h, int s, WorkloadStats* stats, EdgeId source_limit) {
  detail::require_valid_s(s);
  const EdgeId m = h.num_edges();
  const EdgeId limit = (source_limit == 0 || source_limit > m) ? m : source_limit;

  WorkloadStats local;
  local.reset(1);
  auto& c = local.per_worker[0];

  std::vector<NodePair> edges;
  for (EdgeId i = 0; i < limit; ++i) {
    auto members_i = h.edge_members(i);
    for (EdgeId j = i + 1; j < m; ++j) {
      ++c.inner_visits;
      ++c.set_intersections;
      if (intersection_size(members_i, h.edge_members(j)) >= static_cast<std::uint32_t>(s)) {
        edges.emplace_back(i, j);
        ++c.edges_emitted;
      }
    }
  }

  LineGraph g;
  g.s = s;
  g.nodes = detail::edges_of_min_size(h, s);
  g.edges = canonicalize_edges(std::move(edges));
  if (stats) *stats = std::move(local);
  return g;
}

}  // namespace hyperline
