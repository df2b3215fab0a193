#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperline/build.hpp"
#include "hyperline/generator.hpp"
#include "hyperline/hypergraph.hpp"

namespace hyperline {

// Grid benchmark over {algorithm} x {partitioning} x {relabeling} x
// {threads}. Configurations use the three-character notation
// <algo><partition><relabel>, e.g. 2BA = hashmap counting, blocked
// distribution, ascending relabel; algorithm 1 is the per-candidate
// set-intersection construction and 2 the hashmap construction.
struct BenchSpec {
  // Input: a file, or the synthetic generator when input_path is empty.
  std::string input_path;
  InputFormat format = InputFormat::TsvPairs;
  EdgeId gen_m = 10000;
  VertexId gen_n = 5000;
  double gen_exponent = 2.1;
  std::uint32_t gen_max_size = 500;
  std::uint64_t seed = 1;
  BlockStructure blocks{};

  int s = 8;
  std::vector<int> algorithms = {1, 2};
  std::vector<char> partitions = {'B', 'C'};
  std::vector<char> relabels = {'N', 'A', 'D'};
  std::vector<unsigned> thread_counts = {1};
  std::uint32_t chunk_size = 64;
  bool prune = true;
  TlsMode tls = TlsMode::PerIteration;
  int repetitions = 3;

  // Weak scaling: the generated edge count is scaled by the ratio of each
  // thread count to the smallest one (fixed-size input otherwise).
  bool weak_scaling = false;

  // Notation string; empty picks the first grid configuration.
  std::string baseline;
};

struct BenchRow {
  std::string config;
  int algorithm = 0;
  char partition = 'B';
  char relabel = 'N';
  unsigned threads = 1;
  EdgeId m = 0;
  VertexId n = 0;
  std::size_t nnz = 0;
  int s = 0;
  double relabel_seconds = 0.0;
  double construct_seconds = 0.0;  // median of repetitions
  double total_seconds = 0.0;      // relabel + construct
  double speedup = 1.0;            // baseline total / this total, same threads
  std::size_t edges = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  void write_csv(std::ostream& out) const;
  std::string to_json() const;
};

BenchReport run_bench(const BenchSpec& spec);

}  // namespace hyperline
