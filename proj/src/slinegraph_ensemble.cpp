#include <algorithm>
#include <memory>
#include <optional>

#include "hyperline/overlap_accumulator.hpp"

#include "build_common.hpp"

namespace hyperline {

std::vector<LineGraph> slinegraph_ensemble(const Hypergraph& h, const std::vector<int>& s_list,
                                           const BuildOptions& opts) {
  if (s_list.empty()) throw std::invalid_argument("ensemble: s_list must be non-empty");
  for (std::size_t i = 0; i < s_list.size(); ++i) {
    detail::require_valid_s(s_list[i]);
    if (i > 0 && s_list[i] <= s_list[i - 1])
      throw std::invalid_argument("ensemble: s_list must be strictly ascending");
  }
  const auto s_min = static_cast<std::uint32_t>(s_list.front());
  const EdgeId m = h.num_edges();
  const bool upper = opts.direction == WedgeDirection::Upper;
  const bool prealloc = opts.tls == TlsMode::Preallocated;

  WorkloadStats stats;
  stats.reset(opts.workers);

  // Counting pass: store inc(e_i, e_j) for every 1-overlapping pair once.
  // This is the memory hog: the per-source slices together hold every
  // admissible pair, not just those reaching any requested s.
  std::vector<std::vector<std::pair<EdgeId, std::uint32_t>>> overlap(m);
  std::vector<std::unique_ptr<OverlapAccumulator>> tls(opts.workers);
  if (prealloc)
    for (auto& a : tls) a = std::make_unique<OverlapAccumulator>(64);

  for_each_source(m, opts.partition, opts.workers, [&](unsigned w, EdgeId i) {
    if (opts.prune && h.edge_size(i) < s_min) return;
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

    auto& slot = overlap[i];
    slot.reserve(acc.size());
    acc.for_each([&](EdgeId j, std::uint32_t count) {
      if (opts.prune && h.edge_size(j) < s_min) return;  // cannot reach any s_i
      slot.emplace_back(j, count);
    });
  });

  // Filtration pass, one sweep of the stored counts per requested s.
  std::vector<LineGraph> out;
  out.reserve(s_list.size());
  for (int s : s_list) {
    const auto threshold = static_cast<std::uint32_t>(s);
    std::vector<NodePair> edges;
    for (EdgeId i = 0; i < m; ++i)
      for (const auto& [j, count] : overlap[i])
        if (count >= threshold) edges.emplace_back(std::min(i, j), std::max(i, j));

    LineGraph g;
    g.s = s;
    g.nodes = detail::edges_of_min_size(h, s);
    g.edges = canonicalize_edges(std::move(edges));
    stats.per_worker[0].edges_emitted += g.edges.size();
    out.push_back(std::move(g));
  }

  detail::publish_stats(opts, std::move(stats));
  return out;
}

}  // namespace hyperline
