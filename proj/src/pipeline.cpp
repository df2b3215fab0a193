#include "hyperline/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "hyperline/error.hpp"
#include "hyperline/metrics.hpp"

namespace hyperline {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  return out;
}

// Largest component label (ties: smallest label); nullopt when no component
// has two nodes.
std::optional<NodeId> largest_component(const LineGraph& g, const ComponentLabeling& labeling) {
  std::optional<NodeId> best;
  std::size_t best_size = 1;
  for (const auto& members : component_members(g, labeling)) {
    if (members.size() > best_size) {
      best_size = members.size();
      best = members.front();
    }
  }
  return best;
}

nlohmann::json run_metrics_for_graph(const PipelineConfig& cfg, const LineGraph& g,
                                     std::span<const std::int64_t> labels,
                                     const std::filesystem::path& out_dir) {
  nlohmann::json doc;
  auto label_of = [&](NodeId node) -> std::int64_t {
    NodeId original = g.original_of(node);
    return labels.empty() ? static_cast<std::int64_t>(original) : labels[original];
  };

  for (Metric metric : cfg.metrics) {
    switch (metric) {
      case Metric::ConnectedComponents: {
        auto labeling = s_connected_components(g, cfg.include_singletons);
        nlohmann::json entry;
        entry["component_count"] = labeling.component_count;
        auto groups = component_members(g, labeling);
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& members : groups) {
          nlohmann::json ids = nlohmann::json::array();
          for (NodeId node : members) ids.push_back(label_of(node));
          comps.push_back(std::move(ids));
        }
        entry["components"] = std::move(comps);
        doc["cc"] = std::move(entry);
        if (!out_dir.empty()) {
          auto out = open_out(out_dir / ("metric_cc_s" + std::to_string(g.s) + ".tsv"));
          write_components_tsv(out, g, labeling, labels);
        }
        break;
      }
      case Metric::Betweenness: {
        auto bc = s_betweenness(g, /*normalized=*/true, cfg.workers);
        nlohmann::json entry;
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
          entry[std::to_string(label_of(g.nodes[i]))] = bc.values[i];
        doc["bc"] = std::move(entry);
        if (!out_dir.empty()) {
          auto out = open_out(out_dir / ("metric_bc_s" + std::to_string(g.s) + ".tsv"));
          write_metric_tsv(out, g, bc.values, labels);
        }
        break;
      }
      case Metric::AlgebraicConnectivity: {
        auto labeling = s_connected_components(g, true);
        auto target = largest_component(g, labeling);
        if (!target) {
          doc["ac"] = nullptr;  // no component with >= 2 nodes
          break;
        }
        auto spectral = algebraic_connectivity(g, labeling, *target, cfg.tolerance);
        doc["ac"] = {{"lambda2", spectral.lambda2},
                     {"iterations", spectral.iterations},
                     {"residual", spectral.residual},
                     {"component", label_of(*target)}};
        break;
      }
      case Metric::PageRank: {
        auto pr = pagerank(g, cfg.pagerank_damping, std::min(cfg.tolerance, 1e-10));
        nlohmann::json entry;
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
          entry[std::to_string(label_of(g.nodes[i]))] = pr.values[i];
        doc["pr"] = std::move(entry);
        if (!out_dir.empty()) {
          auto out = open_out(out_dir / ("metric_pr_s" + std::to_string(g.s) + ".tsv"));
          write_metric_tsv(out, g, pr.values, labels);
        }
        break;
      }
      case Metric::Distance: {
        // Labels -> current node IDs; nodes absent from the graph (below the
        // size threshold or squeezed away as isolated) are unreachable.
        nlohmann::json entry;
        entry["src"] = *cfg.distance_src;
        entry["dst"] = *cfg.distance_dst;
        std::optional<NodeId> src, dst;
        for (NodeId node : g.nodes) {
          if (label_of(node) == *cfg.distance_src) src = node;
          if (label_of(node) == *cfg.distance_dst) dst = node;
        }
        if (src && dst) {
          auto d = s_distance(g, *src, *dst);
          entry["distance"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
        } else {
          entry["distance"] = nullptr;
        }
        doc["dist"] = std::move(entry);
        break;
      }
    }
  }
  return doc;
}

}  // namespace

std::string metrics_to_json(const PipelineConfig& cfg, const LineGraph& g,
                            const std::string& out_dir, std::span<const std::int64_t> labels) {
  std::filesystem::path dir(out_dir);
  if (!out_dir.empty()) std::filesystem::create_directories(dir);
  nlohmann::json doc = run_metrics_for_graph(cfg, g, labels, dir);
  if (!out_dir.empty()) {
    auto out = open_out(dir / ("metrics_s" + std::to_string(g.s) + ".json"));
    out << doc.dump(2) << "\n";
  }
  return doc.dump(2);
}

void PipelineConfig::validate() const {
  if (workers < 1) throw UsageError("workers must be >= 1");
  if (algorithm == Algorithm::Ensemble) {
    if (s_list.empty()) throw UsageError("ensemble requires a non-empty s list");
    for (std::size_t i = 0; i < s_list.size(); ++i) {
      if (s_list[i] < 1) throw UsageError("every s must be >= 1");
      if (i > 0 && s_list[i] <= s_list[i - 1]) throw UsageError("s list must be strictly ascending");
    }
  } else {
    if (!s_list.empty()) throw UsageError("an s list is only valid with the ensemble algorithm");
    if (s < 1) throw UsageError("s must be >= 1");
  }
  if (partition.kind == PartitionStrategy::Kind::Blocked &&
      (partition.chunk_size < PartitionStrategy::kMinChunk ||
       partition.chunk_size > PartitionStrategy::kMaxChunk))
    throw UsageError("chunk size out of range [1, 16384]");
  for (Metric m : metrics) {
    if (m == Metric::Distance && (!distance_src || !distance_dst))
      throw UsageError("the distance metric requires source and destination nodes");
  }
  if (!(pagerank_damping > 0.0 && pagerank_damping < 1.0))
    throw UsageError("pagerank damping must be in (0, 1)");
}

std::string TimingReport::to_json() const {
  nlohmann::json doc;
  doc["preprocessing"] = preprocessing_seconds;
  doc["s_overlap"] = s_overlap_seconds;
  doc["squeeze"] = squeeze_seconds;
  doc["metrics"] = metrics_seconds;
  doc["total"] = total_seconds;
  doc["set_intersections"] = set_intersections;
  doc["per_worker_visits"] = per_worker_visits;
  return doc.dump(2);
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  const auto t_total = Clock::now();

  std::filesystem::path out_dir(cfg.out_dir);
  if (!cfg.out_dir.empty()) std::filesystem::create_directories(out_dir);

  PipelineResult result;

  // Stage 1: load and preprocess.
  auto t0 = Clock::now();
  Hypergraph h = load_hypergraph_file(cfg.input_path, cfg.format);
  h = remove_isolated(h).hypergraph;
  if (cfg.algorithm == Algorithm::Sclique) {
    // The construction runs on the dual, so order the dual's source edges
    // (the vertices of h) by degree instead.
    h = dual(h);
  }
  if (cfg.relabel != RelabelVariant::None) h = relabel_by_degree(h, cfg.relabel).hypergraph;

  // Stage 2 (optional): toplex simplification.
  if (cfg.toplex) {
    auto keep = toplexes(h);
    h = restrict_edges(h, keep).hypergraph;
  }
  result.timing.preprocessing_seconds = seconds_since(t0);
  result.node_labels.assign(h.edge_labels().begin(), h.edge_labels().end());

  // Stage 3: construction.
  t0 = Clock::now();
  WorkloadStats stats;
  BuildOptions opts{cfg.partition, cfg.workers, cfg.prune, cfg.tls, cfg.direction, &stats};
  try {
    switch (cfg.algorithm) {
      case Algorithm::Naive:
        result.graphs.push_back(slinegraph_naive(h, cfg.s, &stats));
        break;
      case Algorithm::Intersection:
        result.graphs.push_back(slinegraph_intersection(h, cfg.s, opts));
        break;
      case Algorithm::Hashmap:
      case Algorithm::Sclique:  // already dualized above
        result.graphs.push_back(slinegraph_hashmap(h, cfg.s, opts));
        break;
      case Algorithm::Ensemble:
        result.graphs = slinegraph_ensemble(h, cfg.s_list, opts);
        break;
      case Algorithm::Spgemm:
        result.graphs.push_back(slinegraph_spgemm(h, cfg.s, cfg.spgemm_cap_bytes, &stats));
        break;
    }
  } catch (const ResourceError& e) {
    throw ResourceError(std::string("s-overlap stage: ") + e.what(), e.estimate_bytes(),
                        e.cap_bytes());
  }
  result.timing.s_overlap_seconds = seconds_since(t0);
  result.timing.set_intersections = stats.total_set_intersections();
  result.timing.per_worker_visits.clear();
  for (const auto& c : stats.per_worker) result.timing.per_worker_visits.push_back(c.inner_visits);

  // Stage 4 (optional): ID squeezing.
  t0 = Clock::now();
  if (cfg.squeeze) {
    for (auto& g : result.graphs) g = hyperline::squeeze(g.edges, g.s);
  }
  result.timing.squeeze_seconds = seconds_since(t0);

  if (!cfg.out_dir.empty()) {
    for (const auto& g : result.graphs) {
      auto out = open_out(out_dir / ("linegraph_s" + std::to_string(g.s) + ".tsv"));
      if (cfg.squeeze) {
        write_edge_list(out, g);
        auto side = open_out(out_dir / ("linegraph_s" + std::to_string(g.s) + ".idmap.tsv"));
        write_id_map(side, g.id_map, result.node_labels);
      } else {
        write_edge_list(out, g, result.node_labels);
      }
    }
  }

  // Stage 5: metrics.
  t0 = Clock::now();
  if (!cfg.metrics.empty()) {
    for (const auto& g : result.graphs) {
      nlohmann::json doc = run_metrics_for_graph(cfg, g, result.node_labels, out_dir);
      if (!cfg.out_dir.empty()) {
        auto out = open_out(out_dir / ("metrics_s" + std::to_string(g.s) + ".json"));
        out << doc.dump(2) << "\n";
      }
    }
  }
  result.timing.metrics_seconds = seconds_since(t0);
  result.timing.total_seconds = seconds_since(t_total);

  if (!cfg.timing_json_path.empty()) {
    auto out = open_out(cfg.timing_json_path);
    out << result.timing.to_json() << "\n";
  }
  return result;
}

}  // namespace hyperline
