#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperline/id_map.hpp"

namespace hyperline {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::int64_t;

// Immutable bipartite incidence structure. Both directions are stored as
// compressed sparse rows: edge -> sorted member vertices and
// vertex -> sorted incident edges. The two directions are exact transposes
// and every list is strictly ascending (incidences are Boolean; duplicates
// are rejected when building).
class Hypergraph {
 public:
  Hypergraph() = default;

  // Builds from (edge, vertex) incidence pairs over internal 0-based IDs.
  // `n`/`m` may exceed the largest mentioned ID, in which case the extra
  // vertices/edges exist but are isolated/empty.
  static Hypergraph from_incidences(VertexId n, EdgeId m,
                                    std::vector<std::pair<EdgeId, VertexId>> pairs,
                                    std::vector<Label> edge_labels = {},
                                    std::vector<Label> vertex_labels = {});

  // Builds from explicit member lists, one per edge. Lists need not be sorted
  // but duplicates within a list are rejected.
  static Hypergraph from_edge_lists(VertexId n, std::vector<std::vector<VertexId>> edges,
                                    std::vector<Label> edge_labels = {},
                                    std::vector<Label> vertex_labels = {});

  VertexId num_vertices() const { return static_cast<VertexId>(vertex_offsets_.size() - 1); }
  EdgeId num_edges() const { return static_cast<EdgeId>(edge_offsets_.size() - 1); }
  std::size_t num_incidences() const { return edge_members_.size(); }

  std::span<const VertexId> edge_members(EdgeId e) const {
    return {edge_members_.data() + edge_offsets_[e], edge_members_.data() + edge_offsets_[e + 1]};
  }
  std::span<const EdgeId> vertex_edges(VertexId v) const {
    return {vertex_edges_.data() + vertex_offsets_[v], vertex_edges_.data() + vertex_offsets_[v + 1]};
  }

  std::uint32_t edge_size(EdgeId e) const {
    return static_cast<std::uint32_t>(edge_offsets_[e + 1] - edge_offsets_[e]);
  }
  std::uint32_t vertex_degree(VertexId v) const {
    return static_cast<std::uint32_t>(vertex_offsets_[v + 1] - vertex_offsets_[v]);
  }

  Label edge_label(EdgeId e) const { return edge_labels_[e]; }
  Label vertex_label(VertexId v) const { return vertex_labels_[v]; }
  std::span<const Label> edge_labels() const { return edge_labels_; }
  std::span<const Label> vertex_labels() const { return vertex_labels_; }

  std::vector<VertexId> isolated_vertices() const;
  std::vector<EdgeId> empty_edges() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  friend Hypergraph dual(const Hypergraph& h);

  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> edge_members_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> vertex_edges_;
  std::vector<Label> edge_labels_;
  std::vector<Label> vertex_labels_;
};

enum class InputFormat { MatrixMarket, TsvPairs };

// Matrix Market coordinate (pattern or integer, general symmetry), rows are
// vertices and columns are hyperedges, 1-based. Declared-but-unreferenced
// rows/columns are retained as isolated vertices / empty edges.
//
// TSV pairs: one `<edge_id>\t<vertex_id>` incidence per line, 0-based
// non-negative integers, '#'-prefixed comment lines and blank lines ignored.
// External IDs are compacted to contiguous internal IDs in ascending external
// order; the external IDs are preserved as labels.
Hypergraph load_hypergraph(std::istream& in, InputFormat format);
Hypergraph load_hypergraph_file(const std::string& path, InputFormat format);

// TSV pair lines in label space; loading the output reproduces h up to
// isolated vertices and empty edges (TSV cannot express those).
void write_tsv_pairs(std::ostream& out, const Hypergraph& h);

// Drops vertices with degree 0 and edges with size 0. The returned maps give
// surviving-internal-ID -> old-internal-ID.
struct RemoveIsolatedResult {
  Hypergraph hypergraph;
  IdMap vertex_map;
  IdMap edge_map;
};
RemoveIsolatedResult remove_isolated(const Hypergraph& h);

enum class RelabelVariant { None, AscendingByDegree, DescendingByDegree };

// Permutation of hyperedge IDs by edge size. permutation[old_id] == new_id.
struct RelabelOrder {
  RelabelVariant variant = RelabelVariant::None;
  std::vector<EdgeId> permutation;

  EdgeId to_new(EdgeId old_id) const { return permutation.empty() ? old_id : permutation[old_id]; }
  // inverse()[new_id] == old_id.
  std::vector<EdgeId> inverse() const;
};

// Permutes edge IDs so sizes are monotone in the requested order, ties broken
// by old ID ascending. Vertex incidence lists are re-sorted under the new IDs.
struct RelabelResult {
  Hypergraph hypergraph;
  RelabelOrder order;
};
RelabelResult relabel_by_degree(const Hypergraph& h, RelabelVariant variant);

// Hypergraph of the transposed incidence matrix; vertices and edges swap
// roles. dual(dual(h)) == h.
Hypergraph dual(const Hypergraph& h);

// inc(F) = |intersection of the member sets of the edges in F|.
// adj(U)  = number of hyperedges containing every vertex in U.
// Both reject empty input sets.
std::uint32_t inc(const Hypergraph& h, std::span<const EdgeId> edge_set);
std::uint32_t adj(const Hypergraph& h, std::span<const VertexId> vertex_set);

// Edges contained in no other edge; among identical edges only the lowest ID
// survives. Returned sorted ascending.
std::vector<EdgeId> toplexes(const Hypergraph& h);

// Sub-hypergraph on the given edges (vertex set unchanged). `keep` must be
// sorted ascending; the map gives new-edge-ID -> old-edge-ID.
struct RestrictResult {
  Hypergraph hypergraph;
  IdMap edge_map;
};
RestrictResult restrict_edges(const Hypergraph& h, std::span<const EdgeId> keep);

}  // namespace hyperline
