#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bicis/graph.hpp"
#include "bicis/rational.hpp"

namespace bicis {

// Mutable induced-subgraph overlay used by the searches: active flags, live
// degrees, and per-layer aggregates over one immutable base graph. Mutation
// is remove-only with an undo log; rollback(mark) restores the exact state at
// log_mark() == mark. One view lineage belongs to one search invocation.
class SubgraphView {
 public:
  explicit SubgraphView(const BipartiteGraph& graph);

  const BipartiteGraph& graph() const { return *graph_; }

  bool active(VertexId v) const { return active_[v] != 0; }
  std::uint32_t live_degree(VertexId v) const { return live_degree_[v]; }

  std::uint32_t active_upper() const { return active_count_[0]; }
  std::uint32_t active_lower() const { return active_count_[1]; }
  std::uint32_t active_total() const { return active_count_[0] + active_count_[1]; }
  bool has_both_layers() const { return active_count_[0] > 0 && active_count_[1] > 0; }

  std::uint64_t weight_sum_upper() const { return weight_sum_[0]; }
  std::uint64_t weight_sum_lower() const { return weight_sum_[1]; }
  // Maximum weight among active vertices of the layer; lazily recomputed
  // after the holder is removed. Layer must be nonempty.
  Weight max_weight_upper() const;
  Weight max_weight_lower() const;

  // Active vertex ids, ascending (upper block first by id layout).
  std::vector<VertexId> active_vertices() const;

  std::size_t log_mark() const { return removal_log_.size(); }
  void remove_vertex(VertexId v);
  void rollback(std::size_t mark);
  // Removals recorded after `mark`, in removal order.
  std::span<const VertexId> removed_since(std::size_t mark) const {
    return {removal_log_.data() + mark, removal_log_.data() + removal_log_.size()};
  }

 private:
  int layer_of(VertexId v) const { return graph_->is_upper(v) ? 0 : 1; }
  Weight max_weight(int layer) const;

  const BipartiteGraph* graph_;
  std::vector<std::uint8_t> active_;
  std::vector<std::uint32_t> live_degree_;
  std::uint32_t active_count_[2];
  std::uint64_t weight_sum_[2];
  mutable Weight max_weight_[2];
  mutable bool max_stale_[2];
  std::vector<VertexId> removal_log_;
};

// Peels the view in place to its maximal (alpha, beta)-core: iterative
// worklist removal of upper vertices below alpha and lower vertices below
// beta, O(active vertices + cascaded edges). The result may be empty.
// Removals go through the view's log, so the caller can roll back.
void peel_to_core(SubgraphView& view, std::uint32_t alpha, std::uint32_t beta);

// True iff the view is nonempty and every active upper vertex has live degree
// >= alpha and every active lower vertex >= beta.
bool is_core(const SubgraphView& view, std::uint32_t alpha, std::uint32_t beta);

// Active vertex sets of the connected components, each sorted ascending,
// ordered by smallest contained id.
std::vector<std::vector<VertexId>> connected_components(const SubgraphView& view);

// Removes every active vertex outside `keep` (which must be active vertices).
// Logged like any removal, so rollback undoes the restriction.
void restrict_to(SubgraphView& view, std::span<const VertexId> keep);

// f(S) = avg upper weight + avg lower weight, exact. Both layers must be
// nonempty (UsageError otherwise).
Rational influence(const SubgraphView& view);

// Influence of an explicit vertex set given by global ids.
Rational influence_of(const BipartiteGraph& graph, std::span<const VertexId> vertices);

}  // namespace bicis
