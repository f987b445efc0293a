#pragma once

#include <cstdint>
#include <random>

#include "bicis/graph.hpp"

namespace bicis {

// All generators run on std::mt19937_64 with explicit rejection sampling for
// bounded draws, so a seed fully determines the output independent of the
// standard library's distribution internals.

// Uniform in [0, bound), bound >= 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Structural copy with every vertex weight drawn independently and uniformly
// from [1, w_max]. w_max must be >= 1.
BipartiteGraph generate_weights(const BipartiteGraph& graph, std::uint64_t seed, Weight w_max);

// m distinct edges chosen uniformly from the n_u x n_v grid, then weights as
// generate_weights (continuing the same engine). Requires m <= n_u * n_v.
BipartiteGraph generate_random_bipartite(std::uint32_t n_upper, std::uint32_t n_lower,
                                         std::uint64_t m, std::uint64_t seed, Weight w_max);

// Induced subgraph on a uniform vertex sample: round(fraction * count)
// vertices per layer, fraction in (0, 1]. Surviving vertices are re-indexed
// in ascending original order.
BipartiteGraph sample_vertices(const BipartiteGraph& graph, double fraction, std::uint64_t seed);

}  // namespace bicis
