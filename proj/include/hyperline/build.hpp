#pragma once

#include <cstdint>
#include <vector>

#include "hyperline/hypergraph.hpp"
#include "hyperline/line_graph.hpp"
#include "hyperline/partition.hpp"
#include "hyperline/workload_stats.hpp"

namespace hyperline {

class OverlapAccumulator;

// Two hyperedges are linked in the s-line graph when they share at least s
// vertices. Every construction routine below returns the same canonical edge
// set over E_s = {e : |e| >= s}; they differ in how the overlap counts are
// obtained and in how work is distributed.

// Whether each worker's overlap accumulator is constructed afresh per source
// edge or allocated once and cleared between sources.
enum class TlsMode { PerIteration, Preallocated };

// Which triangle of the (symmetric) overlap matrix the wedge traversal
// covers. Upper pairs ascending relabel; Lower pairs descending relabel.
enum class WedgeDirection { Upper, Lower };

struct BuildOptions {
  PartitionStrategy partition{};
  unsigned workers = 1;
  bool prune = true;
  TlsMode tls = TlsMode::PerIteration;
  WedgeDirection direction = WedgeDirection::Upper;
  WorkloadStats* stats = nullptr;  // optional instrumentation sink
};

// All-pairs sorted-list intersection; the testing oracle. O(m^2 * avg edge
// size), intended for m up to a few thousand. `source_limit` restricts the
// outer loop to the first k sources (benchmark subsampling); 0 means all.
LineGraph slinegraph_naive(const Hypergraph& h, int s, WorkloadStats* stats = nullptr,
                           EdgeId source_limit = 0);

// Wedge traversal with per-candidate short-circuited set intersection.
// Candidates are deduplicated per source edge, pairs are visited in one
// direction only, and sources/candidates smaller than s are pruned.
LineGraph slinegraph_intersection(const Hypergraph& h, int s, const BuildOptions& opts = {});

// Hashmap counting: one OverlapAccumulator pass per source edge counts every
// wedge (e_i, v_k, e_j) exactly once, then candidates with count >= s are
// emitted. Performs zero set-intersection calls.
LineGraph slinegraph_hashmap(const Hypergraph& h, int s, const BuildOptions& opts = {});

// One counting pass storing inc(e_i, e_j) for every 1-overlapping pair, then
// a filtration pass per requested s. Memory is O(total 1-overlapping pairs),
// which can exceed the single-s footprint by orders of magnitude on inputs
// with dense overlap; prefer slinegraph_hashmap unless several s values are
// genuinely needed at once. `s_list` must be non-empty and ascending.
std::vector<LineGraph> slinegraph_ensemble(const Hypergraph& h, const std::vector<int>& s_list,
                                           const BuildOptions& opts = {});

// Sparse-product baseline: materializes the upper triangle of H^T H by
// Gustavson row merging (ikj order), then filters entries >= s. Kept for
// benchmarking against the counting algorithms; it cannot prune and it must
// hold the whole product, so it throws ResourceError when the estimated
// product size would exceed `memory_cap_bytes`.
inline constexpr std::size_t kSpgemmDefaultCapBytes = std::size_t{8} << 30;
LineGraph slinegraph_spgemm(const Hypergraph& h, int s,
                            std::size_t memory_cap_bytes = kSpgemmDefaultCapBytes,
                            WorkloadStats* stats = nullptr);

// s-clique graph (s-section): vertices of h linked when they co-appear in at
// least s hyperedges. Computed as the hashmap construction on the dual, so
// node IDs in the result are vertex IDs of h. s=1 is the clique expansion.
LineGraph sclique_graph(const Hypergraph& h, int s, const BuildOptions& opts = {});

namespace detail {
// Counts, into `acc`, the overlap of `source` with every candidate on the
// chosen side of the diagonal that shares at least one vertex. Exposed for
// white-box accumulator tests.
void count_overlaps_for_source(const Hypergraph& h, EdgeId source, WedgeDirection dir,
                               OverlapAccumulator& acc);
}  // namespace detail

}  // namespace hyperline
