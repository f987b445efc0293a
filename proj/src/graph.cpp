#include "bicis/graph.hpp"

#include <algorithm>
#include <string>

#include "bicis/errors.hpp"

namespace bicis {

BipartiteGraph::BipartiteGraph(std::uint32_t upper_count, std::uint32_t lower_count,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                               std::vector<Weight> upper_weights,
                               std::vector<Weight> lower_weights)
    : upper_count_(upper_count), lower_count_(lower_count) {
  const std::uint32_t n = upper_count_ + lower_count_;

  if (upper_weights.empty()) upper_weights.assign(upper_count_, 1);
  if (lower_weights.empty()) lower_weights.assign(lower_count_, 1);
  if (upper_weights.size() != upper_count_ || lower_weights.size() != lower_count_) {
    throw ValidationError("weight vector size does not match layer size");
  }

  for (const auto& [u, v] : edges) {
    if (u >= upper_count_ || v >= lower_count_) {
      throw ValidationError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                            std::to_string(v) + ")");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[upper_count_ + v];
  }
  offsets_.assign(n + 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  adjacency_.resize(2 * edge_count_);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    const VertexId lo = lower_vertex(v);
    adjacency_[cursor[u]++] = lo;
    adjacency_[cursor[lo]++] = u;
  }
  // Edge list is sorted, so upper adjacency comes out sorted; lower adjacency
  // is filled in ascending upper order and is sorted as well.

  weights_.reserve(n);
  weights_.insert(weights_.end(), upper_weights.begin(), upper_weights.end());
  weights_.insert(weights_.end(), lower_weights.begin(), lower_weights.end());
}

BipartiteGraph BipartiteGraph::with_weights(std::vector<Weight> upper_weights,
                                            std::vector<Weight> lower_weights) const {
  if (upper_weights.size() != upper_count_ || lower_weights.size() != lower_count_) {
    throw ValidationError("weight vector size does not match layer size");
  }
  BipartiteGraph g = *this;
  g.weights_.clear();
  g.weights_.reserve(vertex_count());
  g.weights_.insert(g.weights_.end(), upper_weights.begin(), upper_weights.end());
  g.weights_.insert(g.weights_.end(), lower_weights.begin(), lower_weights.end());
  return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count_);
  for (std::uint32_t u = 0; u < upper_count_; ++u) {
    for (VertexId v : neighbors(u)) out.emplace_back(u, layer_index(v));
  }
  return out;
}

}  // namespace bicis
