#include "hyperline/error.hpp"

#include "build_common.hpp"

namespace hyperline {

// Gustavson row merging over the upper triangle of H^T H: for row i, the
// sparse accumulator sums row k of H over every k in e_i. The whole product
// is materialized first and filtered second, which is exactly the cost this
// baseline exists to demonstrate: no pruning, no on-the-fly filtration.
LineGraph slinegraph_spgemm(const Hypergraph& h, int s, std::size_t memory_cap_bytes,
                            WorkloadStats* stats) {
  detail::require_valid_s(s);
  const EdgeId m = h.num_edges();
  const auto threshold = static_cast<std::uint32_t>(s);

  WorkloadStats local;
  local.reset(1);
  auto& c = local.per_worker[0];

  using Entry = std::pair<EdgeId, std::uint32_t>;  // (column, count)
  std::vector<Entry> product;
  std::vector<std::size_t> row_offsets(m + 1, 0);

  std::vector<std::uint32_t> spa(m, 0);
  std::vector<EdgeId> touched;

  for (EdgeId i = 0; i < m; ++i) {
    touched.clear();
    for (VertexId k : h.edge_members(i)) {
      auto edges_k = h.vertex_edges(k);
      auto pos = std::lower_bound(edges_k.begin(), edges_k.end(), i);
      for (auto it = pos + 1; it != edges_k.end(); ++it) {
        EdgeId j = *it;
        ++c.inner_visits;
        ++c.wedges;
        if (spa[j] == 0) touched.push_back(j);
        ++spa[j];
      }
    }

    std::size_t estimate = (product.size() + touched.size()) * sizeof(Entry);
    if (estimate > memory_cap_bytes)
      throw ResourceError("spgemm baseline: estimated product matrix of " +
                              std::to_string(estimate) + " bytes exceeds cap",
                          estimate, memory_cap_bytes);
    for (EdgeId j : touched) {
      product.emplace_back(j, spa[j]);
      spa[j] = 0;
    }
    row_offsets[i + 1] = product.size();
  }

  // Filtration: thresholding the stored product.
  std::vector<NodePair> edges;
  for (EdgeId i = 0; i < m; ++i) {
    for (std::size_t k = row_offsets[i]; k < row_offsets[i + 1]; ++k) {
      const auto& [j, count] = product[k];
      if (count >= threshold) {
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
