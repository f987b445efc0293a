#include "bicis/view.hpp"

#include <algorithm>
#include <string>

#include "bicis/errors.hpp"

namespace bicis {

SubgraphView::SubgraphView(const BipartiteGraph& graph)
    : graph_(&graph),
      active_(graph.vertex_count(), 1),
      live_degree_(graph.vertex_count(), 0),
      active_count_{graph.upper_count(), graph.lower_count()},
      weight_sum_{0, 0},
      max_weight_{0, 0},
      max_stale_{false, false} {
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    live_degree_[v] = graph.degree(v);
    const int layer = layer_of(v);
    weight_sum_[layer] += graph.weight(v);
    max_weight_[layer] = std::max(max_weight_[layer], graph.weight(v));
  }
}

Weight SubgraphView::max_weight(int layer) const {
  if (active_count_[layer] == 0) throw UsageError("max weight of an empty layer");
  if (max_stale_[layer]) {
    Weight best = 0;
    const VertexId begin = layer == 0 ? 0 : graph_->upper_count();
    const VertexId end = layer == 0 ? graph_->upper_count() : graph_->vertex_count();
    for (VertexId v = begin; v < end; ++v) {
      if (active_[v]) best = std::max(best, graph_->weight(v));
    }
    max_weight_[layer] = best;
    max_stale_[layer] = false;
  }
  return max_weight_[layer];
}

Weight SubgraphView::max_weight_upper() const { return max_weight(0); }
Weight SubgraphView::max_weight_lower() const { return max_weight(1); }

std::vector<VertexId> SubgraphView::active_vertices() const {
  std::vector<VertexId> out;
  out.reserve(active_total());
  for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
    if (active_[v]) out.push_back(v);
  }
  return out;
}

void SubgraphView::remove_vertex(VertexId v) {
  if (v >= active_.size() || !active_[v]) {
    throw UsageError("remove_vertex: vertex " + std::to_string(v) + " is not active");
  }
  active_[v] = 0;
  const int layer = layer_of(v);
  --active_count_[layer];
  weight_sum_[layer] -= graph_->weight(v);
  if (!max_stale_[layer] && graph_->weight(v) == max_weight_[layer]) max_stale_[layer] = true;
  for (VertexId w : graph_->neighbors(v)) {
    if (active_[w]) --live_degree_[w];
  }
  // The removed vertex keeps its frozen live degree; no later removal touches
  // it, so restoring in reverse order makes the frozen value exact again.
  removal_log_.push_back(v);
}

void SubgraphView::rollback(std::size_t mark) {
  if (mark > removal_log_.size()) throw UsageError("rollback past the end of the removal log");
  while (removal_log_.size() > mark) {
    const VertexId v = removal_log_.back();
    removal_log_.pop_back();
    active_[v] = 1;
    const int layer = layer_of(v);
    ++active_count_[layer];
    weight_sum_[layer] += graph_->weight(v);
    if (!max_stale_[layer]) max_weight_[layer] = std::max(max_weight_[layer], graph_->weight(v));
    for (VertexId w : graph_->neighbors(v)) {
      if (active_[w]) ++live_degree_[w];
    }
  }
}

void peel_to_core(SubgraphView& view, std::uint32_t alpha, std::uint32_t beta) {
  const BipartiteGraph& g = view.graph();
  auto threshold = [&](VertexId v) { return g.is_upper(v) ? alpha : beta; };

  std::vector<VertexId> worklist;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (view.active(v) && view.live_degree(v) < threshold(v)) worklist.push_back(v);
  }
  while (!worklist.empty()) {
    const VertexId v = worklist.back();
    worklist.pop_back();
    if (!view.active(v)) continue;
    view.remove_vertex(v);
    for (VertexId w : g.neighbors(v)) {
      if (view.active(w) && view.live_degree(w) < threshold(w)) worklist.push_back(w);
    }
  }
}

bool is_core(const SubgraphView& view, std::uint32_t alpha, std::uint32_t beta) {
  if (view.active_total() == 0) return false;
  const BipartiteGraph& g = view.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!view.active(v)) continue;
    if (view.live_degree(v) < (g.is_upper(v) ? alpha : beta)) return false;
  }
  return true;
}

std::vector<std::vector<VertexId>> connected_components(const SubgraphView& view) {
  const BipartiteGraph& g = view.graph();
  std::vector<std::vector<VertexId>> components;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId seed = 0; seed < g.vertex_count(); ++seed) {
    if (!view.active(seed) || seen[seed]) continue;
    std::vector<VertexId> comp;
    seen[seed] = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (view.active(w) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

void restrict_to(SubgraphView& view, std::span<const VertexId> keep) {
  std::vector<std::uint8_t> kept(view.graph().vertex_count(), 0);
  for (VertexId v : keep) kept[v] = 1;
  for (VertexId v = 0; v < view.graph().vertex_count(); ++v) {
    if (view.active(v) && !kept[v]) view.remove_vertex(v);
  }
}

Rational influence(const SubgraphView& view) {
  if (!view.has_both_layers()) throw UsageError("influence is undefined for an empty layer");
  const auto nu = static_cast<Rational::int128>(view.active_upper());
  const auto nv = static_cast<Rational::int128>(view.active_lower());
  const auto su = static_cast<Rational::int128>(view.weight_sum_upper());
  const auto sv = static_cast<Rational::int128>(view.weight_sum_lower());
  return Rational::from_ratio(su * nv + sv * nu, nu * nv);
}

Rational influence_of(const BipartiteGraph& graph, std::span<const VertexId> vertices) {
  Rational::int128 sum[2] = {0, 0};
  Rational::int128 count[2] = {0, 0};
  for (VertexId v : vertices) {
    const int layer = graph.is_upper(v) ? 0 : 1;
    sum[layer] += graph.weight(v);
    ++count[layer];
  }
  if (count[0] == 0 || count[1] == 0) {
    throw UsageError("influence is undefined for an empty layer");
  }
  return Rational::from_ratio(sum[0] * count[1] + sum[1] * count[0], count[0] * count[1]);
}

}  // namespace bicis
