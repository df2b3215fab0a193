#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hyperline/line_graph.hpp"

namespace hyperline {

// Per-node component labels. Two nodes share a label iff a path connects
// them; the label is the minimum node ID of the component. `labels` is
// parallel to g.nodes. component_count honors the singleton flag.
struct ComponentLabeling {
  std::vector<NodeId> labels;
  std::uint32_t component_count = 0;
  bool include_singletons = true;
};

enum class ComponentAlgorithm { UnionFind, LabelPropagation };

ComponentLabeling s_connected_components(const LineGraph& g, bool include_singletons = true,
                                         ComponentAlgorithm algo = ComponentAlgorithm::UnionFind);

// Members of each component, keyed by label, each sorted; singletons dropped
// when the labeling suppresses them.
std::vector<std::vector<NodeId>> component_members(const LineGraph& g,
                                                   const ComponentLabeling& labeling);

// Shortest path length between two nodes of g (IDs as listed in g.nodes);
// nullopt when unreachable, 0 iff src == dst.
std::optional<std::uint32_t> s_distance(const LineGraph& g, NodeId src, NodeId dst);

// Scores parallel to g.nodes.
struct CentralityVector {
  std::vector<double> values;
  bool normalized = false;
};

// Brandes shortest-path betweenness over unordered pairs. Normalization
// divides by (k-1)(k-2)/2 with k = number of nodes in g. Sources may be
// split across workers; per-worker accumulators are reduced at the end.
CentralityVector s_betweenness(const LineGraph& g, bool normalized = false, unsigned workers = 1);

// lambda2 of the normalized Laplacian I - D^{-1/2} A D^{-1/2} of one
// connected component.
struct SpectralResult {
  double lambda2 = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;
};

inline constexpr std::size_t kSpectralDenseLimit = 512;
inline constexpr std::size_t kSpectralIterationCap = 100000;

// Restricts g to the component carrying `component_label` (a label out of
// `labeling`), which must have >= 2 nodes. Components up to
// kSpectralDenseLimit nodes use a dense eigensolve; larger ones use deflated
// power iteration on the spectrum-reversed operator, throwing
// ConvergenceError with the best residual when the cap is hit.
SpectralResult algebraic_connectivity(const LineGraph& g, const ComponentLabeling& labeling,
                                      NodeId component_label, double tol = 1e-8);

// PageRank with uniform teleport. Mass leaking at dangling (isolated) nodes
// is not redistributed, so they keep teleport-only mass; the final vector is
// normalized to sum to 1. Throws ConvergenceError past the iteration cap.
CentralityVector pagerank(const LineGraph& g, double damping = 0.85, double tol = 1e-10,
                          std::size_t max_iterations = 100000);

// `<node> \t <value>` lines. `labels`, when given, is indexed by original
// node ID (the node's id_map image), covering that whole space.
void write_metric_tsv(std::ostream& out, const LineGraph& g, std::span<const double> values,
                      std::span<const std::int64_t> labels = {});
void write_components_tsv(std::ostream& out, const LineGraph& g, const ComponentLabeling& labeling,
                          std::span<const std::int64_t> labels = {});

}  // namespace hyperline
