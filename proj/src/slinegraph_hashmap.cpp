#include <algorithm>
#include <memory>
#include <optional>

#include "hyperline/overlap_accumulator.hpp"

#include "build_common.hpp"

namespace hyperline {

namespace detail {

void count_overlaps_for_source(const Hypergraph& h, EdgeId source, WedgeDirection dir,
                               OverlapAccumulator& acc) {
  const bool upper = dir == WedgeDirection::Upper;
  for (VertexId v : h.edge_members(source)) {
    auto edges_v = h.vertex_edges(v);
    auto pos = std::lower_bound(edges_v.begin(), edges_v.end(), source);
    auto first = upper ? pos + 1 : edges_v.begin();
    auto last = upper ? edges_v.end() : pos;
    for (auto it = first; it != last; ++it) acc.increment(*it);
  }
}

}  // namespace detail

LineGraph slinegraph_hashmap(const Hypergraph& h, int s, const BuildOptions& opts) {
  detail::require_valid_s(s);
  const EdgeId m = h.num_edges();
  const auto threshold = static_cast<std::uint32_t>(s);
  const bool upper = opts.direction == WedgeDirection::Upper;
  const bool prealloc = opts.tls == TlsMode::Preallocated;

  WorkloadStats stats;
  stats.reset(opts.workers);
  std::vector<std::vector<NodePair>> buffers(opts.workers);
  std::vector<std::unique_ptr<OverlapAccumulator>> tls(opts.workers);
  if (prealloc)
    for (auto& a : tls) a = std::make_unique<OverlapAccumulator>(64);

  for_each_source(m, opts.partition, opts.workers, [&](unsigned w, EdgeId i) {
    if (opts.prune && h.edge_size(i) < threshold) return;
    auto& c = stats.per_worker[w];

    std::optional<OverlapAccumulator> fresh;
    if (!prealloc) fresh.emplace();
    OverlapAccumulator& acc = prealloc ? *tls[w] : *fresh;
    if (prealloc) acc.clear();

    for (VertexId v : h.edge_members(i)) {
      auto edges_v = h.vertex_edges(v);
      auto pos = std::lower_bound(edges_v.begin(), edges_v.end(), i);
      auto first = upper ? pos + 1 : edges_v.begin();
      auto last = upper ? edges_v.end() : pos;
      for (auto it = first; it != last; ++it) {
        ++c.inner_visits;
        ++c.wedges;
        acc.increment(*it);
      }
    }

    acc.for_each([&](EdgeId j, std::uint32_t count) {
      if (count >= threshold) {
        buffers[w].emplace_back(std::min(i, j), std::max(i, j));
        ++c.edges_emitted;
      }
    });
  });

  LineGraph g = detail::finalize_linegraph(h, s, std::move(buffers));
  detail::publish_stats(opts, std::move(stats));
  return g;
}

LineGraph sclique_graph(const Hypergraph& h, int s, const BuildOptions& opts) {
  detail::require_valid_s(s);
  return slinegraph_hashmap(dual(h), s, opts);
}

}  // namespace hyperline
