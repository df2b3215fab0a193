#pragma once

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hyperline {

// Assignment of source hyperedges to workers. Blocked gives each worker one
// contiguous span of whole chunks; Cyclic deals IDs round-robin with stride
// equal to the worker count (worker 0 takes e_0, e_0+w, e_0+2w, ...).
struct PartitionStrategy {
  enum class Kind { Blocked, Cyclic };

  static constexpr std::uint32_t kMinChunk = 1;
  static constexpr std::uint32_t kMaxChunk = 16384;

  Kind kind = Kind::Blocked;
  std::uint32_t chunk_size = 64;  // Blocked only

  static PartitionStrategy blocked(std::uint32_t chunk = 64) {
    if (chunk < kMinChunk || chunk > kMaxChunk)
      throw std::invalid_argument("PartitionStrategy: chunk_size out of range [1, 16384]");
    return {Kind::Blocked, chunk};
  }
  static PartitionStrategy cyclic() { return {Kind::Cyclic, 0}; }
};

// Runs fn(worker_id, source_id) over [0, count) with static assignment per
// the strategy. Assignment is a pure function of (count, strategy, workers),
// so per-worker instrumentation is reproducible.
template <class Fn>
void for_each_source(std::uint32_t count, const PartitionStrategy& part, unsigned workers, Fn&& fn) {
  if (workers == 0) throw std::invalid_argument("for_each_source: workers must be >= 1");

  auto run_worker = [&](unsigned w) {
    if (part.kind == PartitionStrategy::Kind::Cyclic) {
      for (std::uint32_t id = w; id < count; id += workers) fn(w, id);
    } else {
      const std::uint64_t chunk = part.chunk_size == 0 ? 64 : part.chunk_size;
      const std::uint64_t num_chunks = (count + chunk - 1) / chunk;
      const std::uint64_t chunks_per_worker = (num_chunks + workers - 1) / workers;
      const std::uint64_t begin = w * chunks_per_worker * chunk;
      const std::uint64_t end = std::min<std::uint64_t>(count, (w + 1) * chunks_per_worker * chunk);
      for (std::uint64_t id = begin; id < end; ++id) fn(w, static_cast<std::uint32_t>(id));
    }
  };

  if (workers == 1) {
    run_worker(0);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
}

}  // namespace hyperline
