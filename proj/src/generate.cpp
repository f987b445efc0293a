#include "bicis/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "bicis/errors.hpp"

namespace bicis {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Rejection sampling (Lemire threshold): accept x >= (2^64 - bound) % bound.
  const std::uint64_t threshold = (~bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

namespace {

std::vector<Weight> draw_weights(std::mt19937_64& rng, std::size_t count, Weight w_max) {
  std::vector<Weight> w(count);
  for (auto& x : w) x = 1 + uniform_below(rng, w_max);
  return w;
}

// Floyd's sampling: m distinct values from [0, population), uniform.
std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng, std::uint64_t population,
                                           std::uint64_t m) {
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  for (std::uint64_t j = population - m; j < population; ++j) {
    std::uint64_t t = uniform_below(rng, j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BipartiteGraph generate_weights(const BipartiteGraph& graph, std::uint64_t seed, Weight w_max) {
  if (w_max < 1) throw ValidationError("w_max must be >= 1");
  std::mt19937_64 rng(seed);
  auto uw = draw_weights(rng, graph.upper_count(), w_max);
  auto lw = draw_weights(rng, graph.lower_count(), w_max);
  return graph.with_weights(std::move(uw), std::move(lw));
}

BipartiteGraph generate_random_bipartite(std::uint32_t n_upper, std::uint32_t n_lower,
                                         std::uint64_t m, std::uint64_t seed, Weight w_max) {
  if (w_max < 1) throw ValidationError("w_max must be >= 1");
  const std::uint64_t grid = static_cast<std::uint64_t>(n_upper) * n_lower;
  if (m > grid) {
    throw ValidationError("edge count " + std::to_string(m) + " exceeds n_u * n_v = " +
                          std::to_string(grid));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (m > 0) {
    edges.reserve(static_cast<std::size_t>(m));
    for (std::uint64_t cell : sample_distinct(rng, grid, m)) {
      edges.emplace_back(static_cast<std::uint32_t>(cell / n_lower),
                         static_cast<std::uint32_t>(cell % n_lower));
    }
  }
  auto uw = draw_weights(rng, n_upper, w_max);
  auto lw = draw_weights(rng, n_lower, w_max);
  return BipartiteGraph(n_upper, n_lower, std::move(edges), std::move(uw), std::move(lw));
}

BipartiteGraph sample_vertices(const BipartiteGraph& graph, double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ValidationError("sample fraction must be in (0, 1]");
  }
  std::mt19937_64 rng(seed);

  auto pick_layer = [&](std::uint32_t count) {
    const auto keep =
        static_cast<std::uint64_t>(std::min<double>(count, std::llround(fraction * count)));
    std::vector<std::uint64_t> kept =
        keep == 0 ? std::vector<std::uint64_t>{} : sample_distinct(rng, count, keep);
    std::vector<std::uint32_t> remap(count, UINT32_MAX);
    for (std::size_t i = 0; i < kept.size(); ++i) remap[kept[i]] = static_cast<std::uint32_t>(i);
    return remap;
  };
  auto upper_map = pick_layer(graph.upper_count());
  auto lower_map = pick_layer(graph.lower_count());

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& [u, v] : graph.edges()) {
    if (upper_map[u] != UINT32_MAX && lower_map[v] != UINT32_MAX) {
      edges.emplace_back(upper_map[u], lower_map[v]);
    }
  }
  std::vector<Weight> uw;
  std::vector<Weight> lw;
  for (std::uint32_t u = 0; u < graph.upper_count(); ++u) {
    if (upper_map[u] != UINT32_MAX) uw.push_back(graph.weight(graph.upper_vertex(u)));
  }
  for (std::uint32_t v = 0; v < graph.lower_count(); ++v) {
    if (lower_map[v] != UINT32_MAX) lw.push_back(graph.weight(graph.lower_vertex(v)));
  }
  const auto kept_upper = static_cast<std::uint32_t>(uw.size());
  const auto kept_lower = static_cast<std::uint32_t>(lw.size());
  return BipartiteGraph(kept_upper, kept_lower, std::move(edges), std::move(uw), std::move(lw));
}

}  // namespace bicis
