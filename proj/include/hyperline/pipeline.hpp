#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperline/build.hpp"
#include "hyperline/hypergraph.hpp"
#include "hyperline/line_graph.hpp"

namespace hyperline {

enum class Algorithm { Naive, Intersection, Hashmap, Ensemble, Spgemm, Sclique };

enum class Metric { ConnectedComponents, Betweenness, AlgebraicConnectivity, PageRank, Distance };

// Full description of one end-to-end run: load, preprocess (isolated-element
// removal plus optional relabel-by-degree), optional toplex simplification,
// construction, optional ID squeezing, metric computation, artifact output.
struct PipelineConfig {
  std::string input_path;
  InputFormat format = InputFormat::TsvPairs;

  Algorithm algorithm = Algorithm::Hashmap;
  int s = 1;
  std::vector<int> s_list;  // Ensemble only

  PartitionStrategy partition{};
  RelabelVariant relabel = RelabelVariant::None;
  bool prune = true;
  bool squeeze = false;
  bool toplex = false;
  TlsMode tls = TlsMode::PerIteration;
  WedgeDirection direction = WedgeDirection::Upper;
  unsigned workers = 1;
  std::size_t spgemm_cap_bytes = kSpgemmDefaultCapBytes;

  std::vector<Metric> metrics;
  bool include_singletons = true;
  double pagerank_damping = 0.85;
  double tolerance = 1e-8;
  std::optional<std::int64_t> distance_src;  // original labels
  std::optional<std::int64_t> distance_dst;

  std::string out_dir;          // empty: no files written
  std::string timing_json_path; // empty: no timing file
  std::uint64_t seed = 0;

  // Throws UsageError on conflicts; called by run_pipeline before any work.
  void validate() const;
};

// Wall-clock per stage, mirroring the construction-pipeline cost breakdown,
// plus the instrumentation counters of the construction run.
struct TimingReport {
  double preprocessing_seconds = 0.0;
  double s_overlap_seconds = 0.0;
  double squeeze_seconds = 0.0;
  double metrics_seconds = 0.0;
  double total_seconds = 0.0;
  std::uint64_t set_intersections = 0;
  std::vector<std::uint64_t> per_worker_visits;

  std::string to_json() const;
};

struct PipelineResult {
  std::vector<LineGraph> graphs;          // one per s value
  std::vector<std::int64_t> node_labels;  // original external labels, indexed
                                          // by the graphs' original node IDs
  TimingReport timing;
};

PipelineResult run_pipeline(const PipelineConfig& cfg);

// Runs cfg.metrics over one already-built graph and returns the JSON document
// keyed by metric name; per-metric TSVs land in out_dir when non-empty.
// `labels` is indexed by the graph's original node IDs (empty = identity).
std::string metrics_to_json(const PipelineConfig& cfg, const LineGraph& g,
                            const std::string& out_dir,
                            std::span<const std::int64_t> labels = {});

}  // namespace hyperline
