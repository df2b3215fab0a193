#include "hyperline/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hyperline {

namespace {

// Inverse-CDF sampling keeps the draw sequence independent of any standard
// library distribution internals.
struct PowerLawSizes {
  std::vector<double> cdf;

  PowerLawSizes(double exponent, std::uint32_t max_size) : cdf(max_size) {
    double acc = 0.0;
    for (std::uint32_t k = 1; k <= max_size; ++k) {
      acc += std::pow(static_cast<double>(k), -exponent);
      cdf[k - 1] = acc;
    }
    for (double& c : cdf) c /= acc;
  }

  std::uint32_t draw(std::mt19937_64& rng) const {
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint32_t>(it - cdf.begin()) + 1;
  }
};

}  // namespace

Hypergraph generate_synthetic(EdgeId m, VertexId n, double degree_exponent, std::uint32_t max_size,
                              std::uint64_t seed, BlockStructure blocks) {
  if (m < 1 || n < 1) throw std::invalid_argument("generate_synthetic: m and n must be >= 1");
  if (degree_exponent <= 1.0)
    throw std::invalid_argument("generate_synthetic: exponent must be > 1");
  if (max_size == 0 || max_size > n)
    throw std::invalid_argument("generate_synthetic: max_size must be in [1, n]");

  std::mt19937_64 rng(seed);
  PowerLawSizes sizes(degree_exponent, max_size);

  // Sampling without replacement via prefix swaps into a shared pool,
  // undone after every edge so each edge sees the identity pool.
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  std::vector<std::uint32_t> swap_log;

  std::vector<std::vector<VertexId>> edges(m);
  for (EdgeId e = 0; e < m; ++e) {
    std::uint32_t window_begin = 0;
    std::uint32_t window_size = n;
    if (blocks.count > 0) {
      std::uint32_t width = std::max<std::uint32_t>(
          1, static_cast<std::uint32_t>(std::ceil(static_cast<double>(n) / blocks.count *
                                                  (1.0 + blocks.overlap))));
      window_size = std::min<std::uint32_t>(width, n);
      std::uint32_t block =
          static_cast<std::uint32_t>(rng() % blocks.count);
      window_begin = static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(block) * n) / blocks.count);
      if (window_begin + window_size > n) window_begin = n - window_size;
    }

    std::uint32_t size = std::min(sizes.draw(rng), window_size);
    auto& members = edges[e];
    members.reserve(size);
    swap_log.resize(size);
    for (std::uint32_t k = 0; k < size; ++k) {
      std::uint32_t r = k + static_cast<std::uint32_t>(rng() % (window_size - k));
      std::swap(pool[window_begin + k], pool[window_begin + r]);
      swap_log[k] = r;
      members.push_back(pool[window_begin + k]);
    }
    // Replaying the swaps in reverse restores the identity pool in O(size).
    for (std::uint32_t k = size; k-- > 0;)
      std::swap(pool[window_begin + k], pool[window_begin + swap_log[k]]);
    std::sort(members.begin(), members.end());
  }

  return Hypergraph::from_edge_lists(n, std::move(edges));
}

}  // namespace hyperline
