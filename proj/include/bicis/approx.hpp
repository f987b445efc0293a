#pragma once

#include <optional>
#include <span>

#include "bicis/community.hpp"
#include "bicis/graph.hpp"
#include "bicis/search.hpp"
#include "bicis/view.hpp"

namespace bicis {

// Width of one expansion step: `sorted_weights` are a vertex's neighbor
// weights in descending order, `threshold` is alpha when expanding from an
// upper vertex and beta from a lower one. Returns the count of leading
// maximal entries when that count exceeds the threshold, else the threshold;
// the caller clamps to the list length.
std::uint32_t check_gamma(std::span<const Weight> sorted_weights, std::uint32_t threshold);

// Greedy breadth-first expansion of one connected (alpha,beta)-core
// component, reusable across the components of a run. Seeds at the
// maximum-weight upper vertex (ties to the smallest id), expands each popped
// vertex to the check_gamma-widest slice of its weight-sorted neighbors, and
// accepts the grown subgraph after the queue drains iff it is an
// (alpha,beta)-core with influence strictly above h_min. With prune set, the
// expansion stops early once both layers are populated and the running
// influence falls strictly below h_min.
class ComponentExpander {
 public:
  explicit ComponentExpander(const SubgraphView& view);

  std::optional<Community> expand(std::span<const VertexId> component,
                                  const SearchParams& params, const Rational& h_min, bool prune,
                                  SearchStats& stats);

 private:
  bool visited(VertexId v) const { return visit_epoch_[v] == epoch_; }
  bool member(VertexId v) const { return member_epoch_[v] == epoch_; }

  const SubgraphView& view_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> visit_epoch_;
  std::vector<std::uint32_t> member_epoch_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> members_;
  std::vector<VertexId> neighbor_buf_;
  std::vector<Weight> weight_buf_;
};

// Single-pass searches: peel to the maximal core, split into components, and
// expand each component once. pruning_search is newfra_search with the early
// break enabled.
SearchResult newfra_search(const BipartiteGraph& graph, const SearchParams& params);
SearchResult pruning_search(const BipartiteGraph& graph, const SearchParams& params);

}  // namespace bicis
