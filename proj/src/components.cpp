#include <deque>
#include <numeric>

#include "hyperline/metrics.hpp"

#include "metrics_common.hpp"

namespace hyperline {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<NodeId> labels_union_find(const detail::GraphView& view) {
  UnionFind uf(view.size());
  for (const auto& [u, v] : view.g->edges) uf.unite(view.index_of(u), view.index_of(v));

  // Roots are the smallest index of each set, so the canonical label is the
  // root's node ID.
  std::vector<NodeId> labels(view.size());
  for (std::uint32_t i = 0; i < view.size(); ++i) labels[i] = view.id_of(uf.find(i));
  return labels;
}

std::vector<NodeId> labels_propagation(const detail::GraphView& view) {
  std::vector<NodeId> labels(view.size());
  for (std::uint32_t i = 0; i < view.size(); ++i) labels[i] = view.id_of(i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t i = 0; i < view.size(); ++i) {
      NodeId best = labels[i];
      for (std::uint32_t j : view.adjacent(i)) best = std::min(best, labels[j]);
      if (best != labels[i]) {
        labels[i] = best;
        changed = true;
      }
    }
  }
  return labels;
}

}  // namespace

ComponentLabeling s_connected_components(const LineGraph& g, bool include_singletons,
                                         ComponentAlgorithm algo) {
  detail::GraphView view(g);
  ComponentLabeling out;
  out.include_singletons = include_singletons;
  out.labels = algo == ComponentAlgorithm::UnionFind ? labels_union_find(view)
                                                     : labels_propagation(view);

  std::vector<std::uint32_t> sizes(view.size(), 0);
  for (std::uint32_t i = 0; i < view.size(); ++i) ++sizes[view.index_of(out.labels[i])];
  out.component_count = 0;
  for (std::uint32_t i = 0; i < view.size(); ++i) {
    if (sizes[i] == 0) continue;
    if (include_singletons || sizes[i] > 1) ++out.component_count;
  }
  return out;
}

std::vector<std::vector<NodeId>> component_members(const LineGraph& g,
                                                   const ComponentLabeling& labeling) {
  std::vector<std::vector<NodeId>> groups;
  if (g.nodes.empty()) return groups;

  // labels are minimum member IDs; group in ascending label order.
  std::vector<std::pair<NodeId, NodeId>> by_label;  // (label, node)
  by_label.reserve(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) by_label.emplace_back(labeling.labels[i], g.nodes[i]);
  std::sort(by_label.begin(), by_label.end());

  for (std::size_t i = 0; i < by_label.size();) {
    std::size_t j = i;
    while (j < by_label.size() && by_label[j].first == by_label[i].first) ++j;
    if (labeling.include_singletons || j - i > 1) {
      std::vector<NodeId> members;
      members.reserve(j - i);
      for (std::size_t k = i; k < j; ++k) members.push_back(by_label[k].second);
      groups.push_back(std::move(members));
    }
    i = j;
  }
  return groups;
}

std::optional<std::uint32_t> s_distance(const LineGraph& g, NodeId src, NodeId dst) {
  detail::GraphView view(g);
  std::uint32_t s = view.index_of(src);
  std::uint32_t t = view.index_of(dst);
  if (s == t) return 0;

  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> dist(view.size(), kUnseen);
  std::deque<std::uint32_t> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : view.adjacent(u)) {
      if (dist[v] != kUnseen) continue;
      dist[v] = dist[u] + 1;
      if (v == t) return dist[v];
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

}  // namespace hyperline
