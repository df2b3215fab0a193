#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hyperline {

// Per-worker instrumentation of a construction run: how many hyperedges each
// worker touched in the innermost loop, how many wedges it counted (inner
// visits passing the one-direction rule), how many line-graph edges it
// emitted, and how many set-intersection calls it performed.
struct WorkloadStats {
  struct Counters {
    std::uint64_t inner_visits = 0;
    std::uint64_t wedges = 0;
    std::uint64_t edges_emitted = 0;
    std::uint64_t set_intersections = 0;
  };

  std::vector<Counters> per_worker;

  void reset(unsigned workers) { per_worker.assign(workers, Counters{}); }

  std::uint64_t total_inner_visits() const {
    return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0},
                           [](std::uint64_t a, const Counters& c) { return a + c.inner_visits; });
  }
  std::uint64_t total_wedges() const {
    return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0},
                           [](std::uint64_t a, const Counters& c) { return a + c.wedges; });
  }
  std::uint64_t total_edges_emitted() const {
    return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0},
                           [](std::uint64_t a, const Counters& c) { return a + c.edges_emitted; });
  }
  std::uint64_t total_set_intersections() const {
    return std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0},
                           [](std::uint64_t a, const Counters& c) { return a + c.set_intersections; });
  }
};

}  // namespace hyperline
