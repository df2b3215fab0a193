#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "hyperline/generator.hpp"
#include "hyperline/hypergraph.hpp"
#include "hyperline/line_graph.hpp"

namespace testutil {

using namespace hyperline;

// The running example: edges 1:{a,b,c} 2:{b,c,d} 3:{a,b,c,d,e} 4:{e,f} over
// vertices a..f. Loaded through the TSV path so internal edge IDs are 0..3
// with labels 1..4 and vertices a..f are 0..5.
inline Hypergraph fig1() {
  std::istringstream in(
      "1\t0\n1\t1\n1\t2\n"
      "2\t1\n2\t2\n2\t3\n"
      "3\t0\n3\t1\n3\t2\n3\t3\n3\t4\n"
      "4\t4\n4\t5\n");
  return load_hypergraph(in, InputFormat::TsvPairs);
}

// Internal IDs of the fig1 edges by their paper names.
inline constexpr NodeId kEdge1 = 0, kEdge2 = 1, kEdge3 = 2, kEdge4 = 3;
// ... and of the vertices.
inline constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3, kE = 4, kF = 5;

inline std::vector<NodePair> pairs(std::vector<NodePair> v) { return canonicalize_edges(std::move(v)); }

template <class T>
std::vector<T> to_vec(std::span<const T> s) {
  return {s.begin(), s.end()};
}

// Uniformly random hypergraph, empty edges included now and then.
inline Hypergraph random_uniform_hypergraph(std::mt19937_64& rng, std::uint32_t max_m,
                                            std::uint32_t max_n) {
  std::uint32_t m = 1 + rng() % max_m;
  std::uint32_t n = 1 + rng() % max_n;
  std::vector<std::vector<VertexId>> edges(m);
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  for (auto& e : edges) {
    std::uint32_t size = rng() % (std::min<std::uint32_t>(n, 12) + 1);  // may be 0
    for (std::uint32_t k = 0; k < size; ++k)
      std::swap(pool[k], pool[k + rng() % (n - k)]);
    e.assign(pool.begin(), pool.begin() + size);
    std::sort(e.begin(), e.end());
  }
  return Hypergraph::from_edge_lists(n, std::move(edges));
}

// Skewed random hypergraph via the library generator with randomized shape.
inline Hypergraph random_skewed_hypergraph(std::mt19937_64& rng, std::uint32_t max_m,
                                           std::uint32_t max_n) {
  std::uint32_t m = 1 + rng() % max_m;
  std::uint32_t n = 2 + rng() % (max_n - 1);  // within [2, max_n]
  std::uint32_t max_size = 1 + rng() % n;
  double exponent = 1.6 + 0.1 * (rng() % 12);
  return generate_synthetic(m, n, exponent, max_size, rng());
}

// --- Independent oracles ----------------------------------------------------

// Pairwise overlap via 64-bit membership masks (n <= 64 only).
inline std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> masks(h.num_edges(), 0);
  for (EdgeId e = 0; e < h.num_edges(); ++e)
    for (VertexId v : h.edge_members(e)) masks[e] |= std::uint64_t{1} << v;
  return masks;
}

inline std::uint32_t bitset_inc(const std::vector<std::uint64_t>& masks, EdgeId e, EdgeId f) {
  return static_cast<std::uint32_t>(__builtin_popcountll(masks[e] & masks[f]));
}

// Dense co-membership matrix with a zeroed diagonal: W = H H^T - D_V.
inline std::vector<std::vector<std::uint32_t>> dense_comembership(const Hypergraph& h) {
  const VertexId n = h.num_vertices();
  std::vector<std::vector<std::uint32_t>> w(n, std::vector<std::uint32_t>(n, 0));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge_members(e);
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ++w[members[a]][members[b]];
        ++w[members[b]][members[a]];
      }
  }
  return w;
}

// Thresholding of the dense matrix: the expected s-clique edge set.
inline std::vector<NodePair> threshold_comembership(const std::vector<std::vector<std::uint32_t>>& w,
                                                    std::uint32_t s) {
  std::vector<NodePair> edges;
  for (std::uint32_t u = 0; u < w.size(); ++u)
    for (std::uint32_t v = u + 1; v < w.size(); ++v)
      if (w[u][v] >= s) edges.emplace_back(u, v);
  return edges;
}

// Exact rational arithmetic for the betweenness oracle.
struct Fraction {
  long long num = 0, den = 1;

  void add(long long n, long long d) {
    num = num * d + n * den;
    den *= d;
    long long g = std::gcd(std::abs(num), std::abs(den));
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// All-pairs path counting over the BFS DAG; independent of the Brandes
// dependency accumulation it checks. Exact for small graphs.
inline std::vector<double> betweenness_oracle(std::size_t k, const std::vector<NodePair>& edges,
                                              bool normalized) {
  std::vector<std::vector<std::uint32_t>> adjacency(k);
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  constexpr std::int64_t kInf = -1;
  auto bfs = [&](std::uint32_t src, std::vector<std::int64_t>& dist,
                 std::vector<long long>& sigma) {
    dist.assign(k, kInf);
    sigma.assign(k, 0);
    dist[src] = 0;
    sigma[src] = 1;
    std::vector<std::uint32_t> queue{src};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t u = queue[head];
      for (std::uint32_t v : adjacency[u]) {
        if (dist[v] == kInf) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }
  };

  std::vector<std::vector<std::int64_t>> dist(k);
  std::vector<std::vector<long long>> sigma(k);
  for (std::uint32_t v = 0; v < k; ++v) {
    bfs(v, dist[v], sigma[v]);
  }

  std::vector<Fraction> acc(k);
  for (std::uint32_t s = 0; s < k; ++s) {
    for (std::uint32_t t = s + 1; t < k; ++t) {
      if (dist[s][t] == kInf) continue;
      for (std::uint32_t v = 0; v < k; ++v) {
        if (v == s || v == t) continue;
        if (dist[s][v] == kInf || dist[v][t] == kInf) continue;
        if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
        long long through = sigma[s][v] * sigma[v][t];
        if (through > 0) acc[v].add(through, sigma[s][t]);
      }
    }
  }

  std::vector<double> out(k);
  double denom = normalized && k >= 3 ? 0.5 * (k - 1.0) * (k - 2.0) : 1.0;
  for (std::uint32_t v = 0; v < k; ++v) out[v] = acc[v].value() / denom;
  return out;
}

}  // namespace testutil
