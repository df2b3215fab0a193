#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hyperline/bench.hpp"
#include "hyperline/error.hpp"
#include "hyperline/generator.hpp"
#include "hyperline/metrics.hpp"
#include "hyperline/pipeline.hpp"

namespace {

using namespace hyperline;

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;

const std::map<std::string, InputFormat> kFormats{{"mm", InputFormat::MatrixMarket},
                                                  {"tsv", InputFormat::TsvPairs}};
const std::map<std::string, Algorithm> kAlgorithms{{"naive", Algorithm::Naive},
                                                   {"intersect", Algorithm::Intersection},
                                                   {"hashmap", Algorithm::Hashmap},
                                                   {"ensemble", Algorithm::Ensemble},
                                                   {"spgemm", Algorithm::Spgemm}};
const std::map<std::string, RelabelVariant> kRelabels{{"none", RelabelVariant::None},
                                                      {"asc", RelabelVariant::AscendingByDegree},
                                                      {"desc", RelabelVariant::DescendingByDegree}};
const std::map<std::string, Metric> kMetrics{{"cc", Metric::ConnectedComponents},
                                             {"bc", Metric::Betweenness},
                                             {"ac", Metric::AlgebraicConnectivity},
                                             {"pr", Metric::PageRank},
                                             {"dist", Metric::Distance}};
const std::map<std::string, TlsMode> kTlsModes{{"fresh", TlsMode::PerIteration},
                                               {"prealloc", TlsMode::Preallocated}};

struct CommonOptions {
  std::string partition = "blocked";
  std::uint32_t chunk = 64;
  std::string relabel = "none";
  bool no_prune = false;
  bool squeeze = false;
  bool toplex = false;
  unsigned threads = 1;
  std::string tls = "fresh";
  bool lower_triangle = false;
  std::vector<std::string> metric_names;
  std::string out_dir;
  std::string timing_json;
  std::uint64_t seed = 0;
  double damping = 0.85;
  double tol = 1e-8;
  bool no_singletons = false;
  std::int64_t dist_src = -1;
  std::int64_t dist_dst = -1;
  std::size_t spgemm_cap_mib = 8192;
};

void add_common(CLI::App* cmd, CommonOptions& o, PipelineConfig& cfg) {
  cmd->add_option("--input", cfg.input_path, "input hypergraph file")->required();
  cmd->add_option("--format", cfg.format, "input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--partition", o.partition, "work distribution: blocked or cyclic")
      ->check(CLI::IsMember({"blocked", "cyclic"}));
  cmd->add_option("--chunk", o.chunk, "blocked chunk size [1, 16384]");
  cmd->add_option("--relabel", cfg.relabel, "relabel hyperedges by degree")
      ->transform(CLI::CheckedTransformer(kRelabels, CLI::ignore_case));
  cmd->add_flag("--no-prune", o.no_prune, "disable degree-based pruning");
  cmd->add_flag("--squeeze", cfg.squeeze, "compact the surviving node IDs");
  cmd->add_flag("--toplex", cfg.toplex, "restrict to maximal edges before construction");
  cmd->add_option("--threads", cfg.workers, "worker count")->check(CLI::Range(1u, 1024u));
  cmd->add_option("--tls", cfg.tls, "accumulator storage: fresh per source or prealloc")
      ->transform(CLI::CheckedTransformer(kTlsModes, CLI::ignore_case));
  cmd->add_flag("--lower-triangle", o.lower_triangle,
                "traverse the lower triangle (pairs with descending relabel)");
  cmd->add_option("--metrics", o.metric_names, "metrics to compute: cc,bc,ac,pr,dist")
      ->delimiter(',');
  cmd->add_option("--out", cfg.out_dir, "output directory");
  cmd->add_option("--timing-json", cfg.timing_json_path, "per-stage timing JSON path");
  cmd->add_option("--seed", cfg.seed, "seed recorded with the run");
  cmd->add_option("--damping", cfg.pagerank_damping, "pagerank damping");
  cmd->add_option("--tol", cfg.tolerance, "metric tolerance");
  cmd->add_flag("--no-singletons", o.no_singletons, "drop singleton components from reports");
  cmd->add_option("--src-node", o.dist_src, "distance source (original label)");
  cmd->add_option("--dst-node", o.dist_dst, "distance destination (original label)");
  cmd->add_option("--spgemm-cap-mib", o.spgemm_cap_mib, "product matrix cap in MiB");
}

void finish_common(const CommonOptions& o, PipelineConfig& cfg) {
  cfg.partition = o.partition == "cyclic" ? PartitionStrategy::cyclic()
                                          : PartitionStrategy::blocked(o.chunk);
  cfg.prune = !o.no_prune;
  cfg.direction = o.lower_triangle ? WedgeDirection::Lower : WedgeDirection::Upper;
  cfg.include_singletons = !o.no_singletons;
  cfg.spgemm_cap_bytes = o.spgemm_cap_mib << 20;
  for (const auto& name : o.metric_names) {
    auto it = kMetrics.find(name);
    if (it == kMetrics.end()) throw UsageError("unknown metric '" + name + "'");
    cfg.metrics.push_back(it->second);
  }
  if (o.dist_src >= 0) cfg.distance_src = o.dist_src;
  if (o.dist_dst >= 0) cfg.distance_dst = o.dist_dst;
}

void report_pipeline(const PipelineResult& result) {
  for (const auto& g : result.graphs)
    std::cout << "s=" << g.s << " nodes=" << g.num_nodes() << " edges=" << g.num_edges() << "\n";
  std::cout << "timing: " << result.timing.to_json() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"higher-order line graphs of hypergraphs and derived measures"};
  app.require_subcommand(1);

  // --- build -------------------------------------------------------------
  PipelineConfig build_cfg;
  CommonOptions build_common;
  std::string algo_name = "hashmap";
  auto* build = app.add_subcommand("build", "construct one s-line graph and its metrics");
  add_common(build, build_common, build_cfg);
  build->add_option("--s", build_cfg.s, "overlap threshold")->check(CLI::PositiveNumber);
  build->add_option("--algo", build_cfg.algorithm, "construction algorithm")
      ->transform(CLI::CheckedTransformer(kAlgorithms, CLI::ignore_case));
  build->add_option("--s-list", build_cfg.s_list, "thresholds for --algo ensemble")
      ->delimiter(',');

  // --- ensemble ----------------------------------------------------------
  PipelineConfig ens_cfg;
  ens_cfg.algorithm = Algorithm::Ensemble;
  CommonOptions ens_common;
  auto* ensemble = app.add_subcommand("ensemble", "construct s-line graphs for several s at once");
  add_common(ensemble, ens_common, ens_cfg);
  ensemble->add_option("--s-list", ens_cfg.s_list, "ascending thresholds, e.g. 1,2,3,4")
      ->required()
      ->delimiter(',');

  // --- sclique -----------------------------------------------------------
  PipelineConfig scl_cfg;
  scl_cfg.algorithm = Algorithm::Sclique;
  CommonOptions scl_common;
  auto* sclique = app.add_subcommand(
      "sclique", "s-clique graph: vertices linked when co-appearing in >= s hyperedges");
  add_common(sclique, scl_common, scl_cfg);
  sclique->add_option("--s", scl_cfg.s, "co-membership threshold")->check(CLI::PositiveNumber);

  // --- toplex ------------------------------------------------------------
  std::string top_input, top_out;
  InputFormat top_format = InputFormat::TsvPairs;
  auto* toplex_cmd = app.add_subcommand("toplex", "list the maximal edges of a hypergraph");
  toplex_cmd->add_option("--input", top_input, "input hypergraph file")->required();
  toplex_cmd->add_option("--format", top_format, "input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  toplex_cmd->add_option("--out", top_out, "output directory (stdout when omitted)");

  // --- metrics -----------------------------------------------------------
  std::string met_graph, met_out;
  std::vector<std::string> met_names;
  int met_s = 1;
  unsigned met_threads = 1;
  double met_damping = 0.85, met_tol = 1e-8;
  bool met_no_singletons = false;
  std::int64_t met_src = -1, met_dst = -1;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "compute measures over a previously built edge list");
  metrics_cmd->add_option("--graph", met_graph, "line-graph edge list file")->required();
  metrics_cmd->add_option("--metrics", met_names, "cc,bc,ac,pr,dist")->required()->delimiter(',');
  metrics_cmd->add_option("--s", met_s, "threshold recorded in the output");
  metrics_cmd->add_option("--threads", met_threads, "worker count");
  metrics_cmd->add_option("--damping", met_damping, "pagerank damping");
  metrics_cmd->add_option("--tol", met_tol, "tolerance");
  metrics_cmd->add_flag("--no-singletons", met_no_singletons, "drop singleton components");
  metrics_cmd->add_option("--src-node", met_src, "distance source node");
  metrics_cmd->add_option("--dst-node", met_dst, "distance destination node");
  metrics_cmd->add_option("--out", met_out, "output directory (stdout when omitted)");

  // --- gen ---------------------------------------------------------------
  EdgeId gen_m = 1000;
  VertexId gen_n = 500;
  double gen_exponent = 2.1;
  std::uint32_t gen_max_size = 100, gen_blocks = 0;
  double gen_overlap = 0.25;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a synthetic skewed hypergraph");
  gen->add_option("--m", gen_m, "hyperedge count")->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--exponent", gen_exponent, "power-law exponent (> 1)");
  gen->add_option("--max-size", gen_max_size, "largest edge size");
  gen->add_option("--blocks", gen_blocks, "planted overlapping blocks (0 = none)");
  gen->add_option("--block-overlap", gen_overlap, "fractional overlap between blocks");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out-file", gen_out, "TSV output path (stdout when omitted)");

  // --- bench -------------------------------------------------------------
  BenchSpec bench_spec;
  std::string bench_out, bench_tls = "fresh";
  bool bench_no_prune = false;
  auto* bench = app.add_subcommand("bench", "grid benchmark over algorithm/partition/relabel/threads");
  bench->add_option("--input", bench_spec.input_path, "hypergraph file (generator when omitted)");
  bench->add_option("--format", bench_spec.format, "input format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  bench->add_option("--m", bench_spec.gen_m, "generated hyperedge count");
  bench->add_option("--n", bench_spec.gen_n, "generated vertex count");
  bench->add_option("--exponent", bench_spec.gen_exponent, "generator exponent");
  bench->add_option("--max-size", bench_spec.gen_max_size, "generator max edge size");
  bench->add_option("--seed", bench_spec.seed, "generator seed");
  bench->add_option("--s", bench_spec.s, "overlap threshold");
  bench->add_option("--algos", bench_spec.algorithms, "1 (intersection) and/or 2 (hashmap)")
      ->delimiter(',');
  bench->add_option("--partitions", bench_spec.partitions, "B and/or C")->delimiter(',');
  bench->add_option("--relabels", bench_spec.relabels, "subset of N,A,D")->delimiter(',');
  bench->add_option("--threads", bench_spec.thread_counts, "thread counts, e.g. 1,2,4")
      ->delimiter(',');
  bench->add_option("--chunk", bench_spec.chunk_size, "blocked chunk size");
  bench->add_option("--reps", bench_spec.repetitions, "repetitions per cell (median is reported)");
  bench->add_option("--baseline", bench_spec.baseline, "baseline notation, e.g. 1CN");
  bench->add_flag("--weak", bench_spec.weak_scaling, "scale input with thread count");
  bench->add_flag("--no-prune", bench_no_prune, "disable degree-based pruning");
  bench->add_option("--tls", bench_tls, "fresh or prealloc")
      ->check(CLI::IsMember({"fresh", "prealloc"}));
  bench->add_option("--out", bench_out, "output directory for bench.csv / bench.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : kExitUsage;
  }

  if (build->parsed()) {
    finish_common(build_common, build_cfg);
    report_pipeline(run_pipeline(build_cfg));
    return 0;
  }
  if (ensemble->parsed()) {
    finish_common(ens_common, ens_cfg);
    report_pipeline(run_pipeline(ens_cfg));
    return 0;
  }
  if (sclique->parsed()) {
    finish_common(scl_common, scl_cfg);
    report_pipeline(run_pipeline(scl_cfg));
    return 0;
  }
  if (toplex_cmd->parsed()) {
    Hypergraph h = load_hypergraph_file(top_input, top_format);
    auto tops = toplexes(h);
    if (top_out.empty()) {
      for (EdgeId e : tops) std::cout << h.edge_label(e) << "\n";
    } else {
      std::filesystem::create_directories(top_out);
      std::ofstream out(std::filesystem::path(top_out) / "toplexes.tsv");
      for (EdgeId e : tops) out << h.edge_label(e) << "\n";
      std::cout << "toplexes=" << tops.size() << " of " << h.num_edges() << " edges\n";
    }
    return 0;
  }
  if (metrics_cmd->parsed()) {
    std::ifstream in(met_graph);
    if (!in) throw ParseError("cannot open '" + met_graph + "'");
    LineGraph g = read_edge_list(in, met_s);

    PipelineConfig cfg;  // reuse the per-graph metric runner via a mini config
    cfg.workers = met_threads;
    cfg.pagerank_damping = met_damping;
    cfg.tolerance = met_tol;
    cfg.include_singletons = !met_no_singletons;
    if (met_src >= 0) cfg.distance_src = met_src;
    if (met_dst >= 0) cfg.distance_dst = met_dst;
    for (const auto& name : met_names) {
      auto it = kMetrics.find(name);
      if (it == kMetrics.end()) throw UsageError("unknown metric '" + name + "'");
      cfg.metrics.push_back(it->second);
    }
    for (Metric metric : cfg.metrics)
      if (metric == Metric::Distance && (!cfg.distance_src || !cfg.distance_dst))
        throw UsageError("the distance metric requires --src-node and --dst-node");

    std::string json = metrics_to_json(cfg, g, met_out);
    std::cout << json << "\n";
    return 0;
  }
  if (gen->parsed()) {
    Hypergraph h = generate_synthetic(gen_m, gen_n, gen_exponent, gen_max_size, gen_seed,
                                      BlockStructure{gen_blocks, gen_overlap});
    if (gen_out.empty()) {
      write_tsv_pairs(std::cout, h);
    } else {
      std::ofstream out(gen_out);
      if (!out) throw std::runtime_error("cannot write '" + gen_out + "'");
      write_tsv_pairs(out, h);
      std::cout << "m=" << h.num_edges() << " n=" << h.num_vertices()
                << " nnz=" << h.num_incidences() << " -> " << gen_out << "\n";
    }
    return 0;
  }
  if (bench->parsed()) {
    bench_spec.prune = !bench_no_prune;
    bench_spec.tls = bench_tls == "prealloc" ? TlsMode::Preallocated : TlsMode::PerIteration;
    BenchReport report = run_bench(bench_spec);
    std::filesystem::create_directories(bench_out);
    std::ofstream csv(std::filesystem::path(bench_out) / "bench.csv");
    report.write_csv(csv);
    std::ofstream js(std::filesystem::path(bench_out) / "bench.json");
    js << report.to_json() << "\n";
    report.write_csv(std::cout);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hyperline::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hyperline::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hyperline::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
