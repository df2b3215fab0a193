#pragma once

#include <cstdint>

#include "hyperline/hypergraph.hpp"

namespace hyperline {

// Planted overlapping-block structure: vertices are split into `count`
// windows that overlap their successor by `overlap` of the window width, and
// each edge samples its members inside one window. count == 0 samples members
// uniformly from the whole vertex set. A rough stand-in for community-derived
// hypergraphs; no fidelity to any particular dataset is claimed.
struct BlockStructure {
  std::uint32_t count = 0;
  double overlap = 0.25;
};

// Random hypergraph with edge sizes drawn from a truncated power law
// P(k) ~ k^-exponent on [1, max_size] and members sampled without
// replacement. Fully determined by `seed`.
Hypergraph generate_synthetic(EdgeId m, VertexId n, double degree_exponent, std::uint32_t max_size,
                              std::uint64_t seed, BlockStructure blocks = {});

}  // namespace hyperline
