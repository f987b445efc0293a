#include "bicis/approx.hpp"

#include <algorithm>
#include <chrono>

#include "bicis/errors.hpp"

namespace bicis {

std::uint32_t check_gamma(std::span<const Weight> sorted_weights, std::uint32_t threshold) {
  if (sorted_weights.empty()) return threshold;
  std::uint32_t num = 0;
  for (Weight w : sorted_weights) {
    if (w != sorted_weights.front()) break;
    ++num;
  }
  return num > threshold ? num : threshold;
}

ComponentExpander::ComponentExpander(const SubgraphView& view)
    : view_(view),
      visit_epoch_(view.graph().vertex_count(), 0),
      member_epoch_(view.graph().vertex_count(), 0) {}

std::optional<Community> ComponentExpander::expand(std::span<const VertexId> component,
                                                   const SearchParams& params,
                                                   const Rational& h_min, bool prune,
                                                   SearchStats& stats) {
  const BipartiteGraph& g = view_.graph();
  ++epoch_;
  queue_.clear();
  members_.clear();

  // Seed: maximum-weight upper vertex, ties to the smallest id. The
  // component ids are ascending, so a strictly-greater scan does both.
  VertexId seed = UINT32_MAX;
  Weight seed_weight = 0;
  for (VertexId v : component) {
    if (!g.is_upper(v)) break;
    if (seed == UINT32_MAX || g.weight(v) > seed_weight) {
      seed = v;
      seed_weight = g.weight(v);
    }
  }
  if (seed == UINT32_MAX) return std::nullopt;
  visit_epoch_[seed] = epoch_;
  queue_.push_back(seed);

  std::uint64_t weight_sum[2] = {0, 0};
  std::uint32_t count[2] = {0, 0};

  std::size_t head = 0;
  while (head < queue_.size()) {
    const VertexId v = queue_[head++];
    members_.push_back(v);
    member_epoch_[v] = epoch_;
    const int layer = g.is_upper(v) ? 0 : 1;
    weight_sum[layer] += g.weight(v);
    ++count[layer];
    ++stats.vertices_expanded;

    if (prune && count[0] > 0 && count[1] > 0) {
      const auto nu = static_cast<Rational::int128>(count[0]);
      const auto nv = static_cast<Rational::int128>(count[1]);
      const Rational running = Rational::from_ratio(
          static_cast<Rational::int128>(weight_sum[0]) * nv +
              static_cast<Rational::int128>(weight_sum[1]) * nu,
          nu * nv);
      if (running < h_min) {
        ++stats.prune_breaks;
        break;
      }
    }

    neighbor_buf_.clear();
    for (VertexId w : g.neighbors(v)) {
      if (view_.active(w)) neighbor_buf_.push_back(w);
    }
    std::sort(neighbor_buf_.begin(), neighbor_buf_.end(), [&](VertexId a, VertexId b) {
      if (g.weight(a) != g.weight(b)) return g.weight(a) > g.weight(b);
      return a < b;
    });
    weight_buf_.clear();
    for (VertexId w : neighbor_buf_) weight_buf_.push_back(g.weight(w));
    const std::uint32_t threshold = g.is_upper(v) ? params.alpha : params.beta;
    const std::size_t take =
        std::min<std::size_t>(check_gamma(weight_buf_, threshold), neighbor_buf_.size());
    for (std::size_t i = 0; i < take; ++i) {
      const VertexId w = neighbor_buf_[i];
      if (visit_epoch_[w] != epoch_) {
        visit_epoch_[w] = epoch_;
        queue_.push_back(w);
      }
    }
  }

  if (count[0] == 0 || count[1] == 0) return std::nullopt;

  // Acceptance check once the queue drained (or the prune break fired):
  // grown subgraph must be an (alpha,beta)-core that beats h_min.
  for (VertexId v : members_) {
    std::uint32_t deg = 0;
    for (VertexId w : g.neighbors(v)) {
      if (member(w)) ++deg;
    }
    if (deg < (g.is_upper(v) ? params.alpha : params.beta)) return std::nullopt;
  }
  Community community = make_community(g, members_);
  if (!(community.influence > h_min)) return std::nullopt;
  return community;
}

namespace {

SearchResult greedy_search(const BipartiteGraph& graph, const SearchParams& params, bool prune) {
  validate_params(params, false);
  const auto start = std::chrono::steady_clock::now();
  const auto deadline =
      params.time_limit ? std::optional(start + *params.time_limit) : std::nullopt;

  SearchResult result{TopRSet(params.r), SearchStats{}};
  SubgraphView view(graph);
  peel_to_core(view, params.alpha, params.beta);
  result.stats.core_computations = 1;

  ComponentExpander expander(view);
  for (const auto& component : connected_components(view)) {
    if (deadline && std::chrono::steady_clock::now() >= *deadline) {
      result.stats.timed_out = true;
      break;
    }
    ++result.stats.nodes_expanded;
    auto candidate =
        expander.expand(component, params, result.top.min_influence(), prune, result.stats);
    if (candidate) result.top.insert(std::move(*candidate));
  }

  result.stats.wall = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

}  // namespace

SearchResult newfra_search(const BipartiteGraph& graph, const SearchParams& params) {
  return greedy_search(graph, params, /*prune=*/false);
}

SearchResult pruning_search(const BipartiteGraph& graph, const SearchParams& params) {
  return greedy_search(graph, params, /*prune=*/true);
}

}  // namespace bicis
