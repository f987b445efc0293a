#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bicis {

// Global vertex id: upper layer occupies [0, upper_count), lower layer
// occupies [upper_count, upper_count + lower_count). Within each layer,
// vertices are also addressed by a 0-based layer index; file formats and CLI
// output use 1-based layer indices.
using VertexId = std::uint32_t;
using Weight = std::uint64_t;

// An undirected vertex-weighted bipartite graph, immutable after
// construction; safe for concurrent readers. Adjacency is CSR with neighbor
// lists sorted ascending. Duplicate edges are collapsed at construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Edges are (upper index, lower index) pairs, 0-based. Empty weight
  // vectors default every weight to 1.
  BipartiteGraph(std::uint32_t upper_count, std::uint32_t lower_count,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                 std::vector<Weight> upper_weights = {},
                 std::vector<Weight> lower_weights = {});

  std::uint32_t upper_count() const { return upper_count_; }
  std::uint32_t lower_count() const { return lower_count_; }
  std::uint32_t vertex_count() const { return upper_count_ + lower_count_; }
  std::uint64_t edge_count() const { return edge_count_; }

  bool is_upper(VertexId v) const { return v < upper_count_; }
  VertexId upper_vertex(std::uint32_t layer_index) const { return layer_index; }
  VertexId lower_vertex(std::uint32_t layer_index) const { return upper_count_ + layer_index; }
  std::uint32_t layer_index(VertexId v) const { return is_upper(v) ? v : v - upper_count_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  Weight weight(VertexId v) const { return weights_[v]; }

  // Structural copy with new weights (sizes must match the layer counts).
  BipartiteGraph with_weights(std::vector<Weight> upper_weights,
                              std::vector<Weight> lower_weights) const;

  // Edge list as (upper index, lower index), sorted; used by writers.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

 private:
  std::uint32_t upper_count_ = 0;
  std::uint32_t lower_count_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<VertexId> adjacency_;
  std::vector<Weight> weights_;
};

}  // namespace bicis
