#include "hyperline/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "hyperline/error.hpp"

namespace hyperline {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t k = xs.size();
  return k % 2 ? xs[k / 2] : 0.5 * (xs[k / 2 - 1] + xs[k / 2]);
}

std::string notation(int algo, char partition, char relabel) {
  return std::to_string(algo) + std::string(1, partition) + std::string(1, relabel);
}

RelabelVariant variant_of(char relabel) {
  switch (relabel) {
    case 'A': return RelabelVariant::AscendingByDegree;
    case 'D': return RelabelVariant::DescendingByDegree;
    case 'N': return RelabelVariant::None;
  }
  throw UsageError(std::string("unknown relabel code '") + relabel + "'");
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec) {
  if (spec.algorithms.empty() || spec.partitions.empty() || spec.relabels.empty() ||
      spec.thread_counts.empty())
    throw UsageError("bench: the configuration grid is empty");
  if (spec.repetitions < 1) throw UsageError("bench: repetitions must be >= 1");
  for (int a : spec.algorithms)
    if (a != 1 && a != 2) throw UsageError("bench: algorithms are 1 (intersection) or 2 (hashmap)");
  for (char p : spec.partitions)
    if (p != 'B' && p != 'C') throw UsageError("bench: partitions are B or C");
  for (char r : spec.relabels) variant_of(r);

  std::string baseline = spec.baseline.empty()
                             ? notation(spec.algorithms.front(), spec.partitions.front(),
                                        spec.relabels.front())
                             : spec.baseline;
  bool baseline_in_grid = false;
  for (int a : spec.algorithms)
    for (char p : spec.partitions)
      for (char r : spec.relabels)
        if (notation(a, p, r) == baseline) baseline_in_grid = true;
  if (!baseline_in_grid)
    throw UsageError("bench: baseline configuration '" + baseline + "' absent from grid");

  const unsigned min_threads = *std::min_element(spec.thread_counts.begin(),
                                                 spec.thread_counts.end());

  // One input per thread count: fixed for strong scaling, scaled edge count
  // for weak scaling.
  std::map<unsigned, Hypergraph> inputs;
  for (unsigned t : spec.thread_counts) {
    if (inputs.count(t)) continue;
    if (!spec.input_path.empty()) {
      inputs.emplace(t, load_hypergraph_file(spec.input_path, spec.format));
    } else {
      EdgeId m = spec.gen_m;
      if (spec.weak_scaling)
        m = static_cast<EdgeId>(static_cast<std::uint64_t>(spec.gen_m) * t / min_threads);
      inputs.emplace(t, generate_synthetic(m, spec.gen_n, spec.gen_exponent, spec.gen_max_size,
                                           spec.seed, spec.blocks));
    }
  }

  BenchReport report;
  for (int algo : spec.algorithms) {
    for (char partition : spec.partitions) {
      for (char relabel : spec.relabels) {
        for (unsigned threads : spec.thread_counts) {
          const Hypergraph& base = inputs.at(threads);

          BenchRow row;
          row.config = notation(algo, partition, relabel);
          row.algorithm = algo;
          row.partition = partition;
          row.relabel = relabel;
          row.threads = threads;
          row.n = base.num_vertices();
          row.m = base.num_edges();
          row.nnz = base.num_incidences();
          row.s = spec.s;

          // Relabeling is part of the measured cost when requested.
          auto t0 = Clock::now();
          Hypergraph prepared = relabel == 'N'
                                    ? base
                                    : relabel_by_degree(base, variant_of(relabel)).hypergraph;
          row.relabel_seconds =
              relabel == 'N' ? 0.0 : std::chrono::duration<double>(Clock::now() - t0).count();

          BuildOptions opts;
          opts.partition = partition == 'B' ? PartitionStrategy::blocked(spec.chunk_size)
                                            : PartitionStrategy::cyclic();
          opts.workers = threads;
          opts.prune = spec.prune;
          opts.tls = spec.tls;

          std::vector<double> times;
          for (int rep = 0; rep < spec.repetitions; ++rep) {
            auto t1 = Clock::now();
            LineGraph g = algo == 1 ? slinegraph_intersection(prepared, spec.s, opts)
                                    : slinegraph_hashmap(prepared, spec.s, opts);
            times.push_back(std::chrono::duration<double>(Clock::now() - t1).count());
            row.edges = g.num_edges();
          }
          row.construct_seconds = median(std::move(times));
          row.total_seconds = row.relabel_seconds + row.construct_seconds;
          report.rows.push_back(std::move(row));
        }
      }
    }
  }

  // Speedups against the baseline configuration at the same thread count.
  std::map<unsigned, double> baseline_total;
  for (const auto& row : report.rows)
    if (row.config == baseline) baseline_total[row.threads] = row.total_seconds;
  for (auto& row : report.rows) row.speedup = baseline_total.at(row.threads) / row.total_seconds;

  // Strong-scaling shape check: more threads on a fixed input should not run
  // longer. Violations are flagged, not fatal.
  if (!spec.weak_scaling) {
    std::map<std::string, std::map<unsigned, double>> by_config;
    for (const auto& row : report.rows) by_config[row.config][row.threads] = row.construct_seconds;
    for (const auto& [config, times] : by_config) {
      double prev = 0;
      unsigned prev_threads = 0;
      for (const auto& [threads, t] : times) {
        if (prev_threads > 0 && t > prev)
          std::cerr << "bench: warning: " << config << " wall-clock rose from " << prev << "s at "
                    << prev_threads << " threads to " << t << "s at " << threads << " threads\n";
        prev = t;
        prev_threads = threads;
      }
    }
  }

  return report;
}

void BenchReport::write_csv(std::ostream& out) const {
  out << "config,algorithm,partition,relabel,threads,m,n,nnz,s,"
         "relabel_seconds,construct_seconds,total_seconds,speedup,edges\n";
  for (const auto& r : rows) {
    out << r.config << "," << r.algorithm << "," << r.partition << "," << r.relabel << ","
        << r.threads << "," << r.m << "," << r.n << "," << r.nnz << "," << r.s << ","
        << r.relabel_seconds << "," << r.construct_seconds << "," << r.total_seconds << ","
        << r.speedup << "," << r.edges << "\n";
  }
}

std::string BenchReport::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : rows) {
    doc.push_back({{"config", r.config},
                   {"algorithm", r.algorithm},
                   {"partition", std::string(1, r.partition)},
                   {"relabel", std::string(1, r.relabel)},
                   {"threads", r.threads},
                   {"m", r.m},
                   {"n", r.n},
                   {"nnz", r.nnz},
                   {"s", r.s},
                   {"relabel_seconds", r.relabel_seconds},
                   {"construct_seconds", r.construct_seconds},
                   {"total_seconds", r.total_seconds},
                   {"speedup", r.speedup},
                   {"edges", r.edges}});
  }
  return doc.dump(2);
}

}  // namespace hyperline
