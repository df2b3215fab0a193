#include <algorithm>

#include "build_common.hpp"

namespace hyperline {

namespace {

// Merge-count that stops as soon as the threshold is reached or provably
// unreachable from the elements left on either side.
std::uint32_t bounded_overlap(std::span<const VertexId> a, std::span<const VertexId> b,
                              std::uint32_t threshold) {
  std::uint32_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (count + std::min(a.size() - i, b.size() - j) < threshold) return count;
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      if (++count >= threshold) return count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

LineGraph slinegraph_intersection(const Hypergraph& h, int s, const BuildOptions& opts) {
  detail::require_valid_s(s);
  const EdgeId m = h.num_edges();
  const auto threshold = static_cast<std::uint32_t>(s);
  const bool upper = opts.direction == WedgeDirection::Upper;

  WorkloadStats stats;
  stats.reset(opts.workers);
  std::vector<std::vector<NodePair>> buffers(opts.workers);

  struct WorkerState {
    std::vector<std::uint32_t> visit_stamp;  // per-source candidate dedup
    std::uint32_t generation = 0;
    std::vector<EdgeId> candidates;
  };
  std::vector<WorkerState> states(opts.workers);
  for (auto& st : states) st.visit_stamp.assign(m, 0);

  for_each_source(m, opts.partition, opts.workers, [&](unsigned w, EdgeId i) {
    if (opts.prune && h.edge_size(i) < threshold) return;
    auto& st = states[w];
    auto& c = stats.per_worker[w];
    ++st.generation;
    st.candidates.clear();

    auto members_i = h.edge_members(i);
    for (VertexId v : members_i) {
      auto edges_v = h.vertex_edges(v);
      // edges_v is sorted and contains i (v is a member of e_i), so the
      // admissible side of the diagonal is a contiguous run around it.
      auto pos = std::lower_bound(edges_v.begin(), edges_v.end(), i);
      auto first = upper ? pos + 1 : edges_v.begin();
      auto last = upper ? edges_v.end() : pos;
      for (auto it = first; it != last; ++it) {
        EdgeId j = *it;
        ++c.inner_visits;
        ++c.wedges;
        if (st.visit_stamp[j] == st.generation) continue;
        st.visit_stamp[j] = st.generation;
        if (opts.prune && h.edge_size(j) < threshold) continue;
        st.candidates.push_back(j);
      }
    }

    for (EdgeId j : st.candidates) {
      ++c.set_intersections;
      if (bounded_overlap(members_i, h.edge_members(j), threshold) >= threshold) {
        buffers[w].emplace_back(std::min(i, j), std::max(i, j));
        ++c.edges_emitted;
      }
    }
  });

  LineGraph g = detail::finalize_linegraph(h, s, std::move(buffers));
  detail::publish_stats(opts, std::move(stats));
  return g;
}

}  // namespace hyperline
