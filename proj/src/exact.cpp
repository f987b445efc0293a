#include "bicis/exact.hpp"

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "bicis/community.hpp"
#include "bicis/errors.hpp"

namespace bicis {

Rational ub1(const SubgraphView& view) {
  if (!view.has_both_layers()) throw UsageError("ub1 is undefined for an empty layer");
  const auto sum = static_cast<Rational::int128>(view.max_weight_upper()) +
                   static_cast<Rational::int128>(view.max_weight_lower());
  return Rational::from_ratio(sum, 1);
}

Rational ub2(const SubgraphView& view, std::uint32_t alpha, std::uint32_t beta) {
  if (!view.has_both_layers()) throw UsageError("ub2 is undefined for an empty layer");
  return Rational::from_ratio(static_cast<Rational::int128>(view.weight_sum_upper()), beta) +
         Rational::from_ratio(static_cast<Rational::int128>(view.weight_sum_lower()), alpha);
}

Rational double_greedy_avg(std::span<const Weight> weights) {
  Rational::int128 x_sum = 0;
  Rational::int128 y_sum = 0;
  Rational::int128 x_count = 0;
  Rational::int128 y_count = static_cast<Rational::int128>(weights.size());
  for (Weight w : weights) y_sum += w;

  auto avg = [](Rational::int128 sum, Rational::int128 count) {
    return count == 0 ? Rational() : Rational::from_ratio(sum, count);
  };

  for (Weight w : weights) {
    const Rational gain_add = (avg(x_sum + w, x_count + 1) - avg(x_sum, x_count)).clamped_nonnegative();
    const Rational gain_drop = (avg(y_sum - w, y_count - 1) - avg(y_sum, y_count)).clamped_nonnegative();
    if (gain_add >= gain_drop) {
      x_sum += w;
      ++x_count;
    } else {
      y_sum -= w;
      --y_count;
    }
  }
  return avg(x_sum, x_count);
}

Rational ub3(const SubgraphView& view) {
  if (!view.has_both_layers()) throw UsageError("ub3 is undefined for an empty layer");
  const BipartiteGraph& g = view.graph();
  std::vector<Weight> layer;
  layer.reserve(view.active_upper());
  for (VertexId v = 0; v < g.upper_count(); ++v) {
    if (view.active(v)) layer.push_back(g.weight(v));
  }
  Rational bound = double_greedy_avg(layer).scaled(2);
  layer.clear();
  for (VertexId v = g.upper_count(); v < g.vertex_count(); ++v) {
    if (view.active(v)) layer.push_back(g.weight(v));
  }
  return bound + double_greedy_avg(layer).scaled(2);
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode { kBasic, kSlimTree, kUpperBound };

class ExactSearcher {
 public:
  ExactSearcher(const BipartiteGraph& graph, const SearchParams& params, Mode mode)
      : graph_(graph), params_(params), mode_(mode), top_(params.r), view_(graph) {}

  SearchResult run() {
    const auto start = Clock::now();
    if (params_.time_limit) deadline_ = start + *params_.time_limit;
    find();
    stats_.wall = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return SearchResult{std::move(top_), stats_};
  }

 private:
  bool out_of_time() {
    if (stats_.timed_out) return true;
    if (deadline_ && Clock::now() >= *deadline_) stats_.timed_out = true;
    return stats_.timed_out;
  }

  void find() {
    ++stats_.nodes_expanded;
    if (out_of_time()) return;
    peel_to_core(view_, params_.alpha, params_.beta);
    ++stats_.core_computations;
    for (const auto& component : connected_components(view_)) {
      if (stats_.timed_out) return;
      top_.insert(make_community(graph_, component));
      const std::size_t restrict_mark = view_.log_mark();
      restrict_to(view_, component);
      if (mode_ == Mode::kBasic) {
        branch_all(component);
      } else {
        branch_layer(component, /*upper=*/true);
        branch_layer(component, /*upper=*/false);
      }
      view_.rollback(restrict_mark);
    }
  }

  // Basic: one child per component vertex, ascending ids (upper block first),
  // recursion unconditional.
  void branch_all(const std::vector<VertexId>& component) {
    for (VertexId v : component) {
      if (stats_.timed_out) return;
      const std::size_t mark = view_.log_mark();
      view_.remove_vertex(v);
      find();
      view_.rollback(mark);
    }
  }

  // SlimTree / UpperBound: one layer's candidate list, front to back. Each
  // candidate's branch is re-peeled before recursing, so the child search
  // starts on the shrunken core; a branch whose cascade empties the core is
  // skipped outright (an empty core holds nothing to search).
  void branch_layer(const std::vector<VertexId>& component, bool upper) {
    for (const VertexId v : component) {
      if (graph_.is_upper(v) != upper) continue;
      if (stats_.timed_out) return;

      const std::size_t mark = view_.log_mark();
      view_.remove_vertex(v);
      peel_to_core(view_, params_.alpha, params_.beta);
      ++stats_.core_computations;

      if (view_.active_total() == 0) {
        ++stats_.slim_skips;
      } else if (mode_ == Mode::kSlimTree) {
        find();
      } else if (view_.has_both_layers()) {
        const auto [bound, which] = min_enabled_bound();
        if (params_.bound_audit) params_.bound_audit(view_, bound);
        const Rational h_min = top_.min_influence();
        // Descend on a tied bound only when a kept boundary entry lies inside
        // this branch: the branch may then hold the equal-influence superset
        // that supersedes it. Everything else in a tied branch is at most
        // h_min and cannot enter the result.
        if (bound > h_min || (bound == h_min && boundary_entry_in_view(h_min))) {
          find();
        } else {
          record_cut(which);
        }
      }
      view_.rollback(mark);
    }
  }

  bool boundary_entry_in_view(const Rational& h_min) const {
    for (const Community& e : top_.entries()) {
      if (!(e.influence == h_min)) continue;
      bool inside = true;
      for (std::uint32_t u : e.upper_ids) {
        if (!view_.active(graph_.upper_vertex(u))) {
          inside = false;
          break;
        }
      }
      for (std::uint32_t v : e.lower_ids) {
        if (!inside || !view_.active(graph_.lower_vertex(v))) {
          inside = false;
          break;
        }
      }
      if (inside) return true;
    }
    return false;
  }

  std::pair<Rational, int> min_enabled_bound() const {
    Rational best;
    int which = 0;
    if (params_.bounds & kBoundUb1) {
      best = ub1(view_);
      which = 1;
    }
    if (params_.bounds & kBoundUb2) {
      const Rational b = ub2(view_, params_.alpha, params_.beta);
      if (which == 0 || b < best) {
        best = b;
        which = 2;
      }
    }
    if (params_.bounds & kBoundUb3) {
      const Rational b = ub3(view_);
      if (which == 0 || b < best) {
        best = b;
        which = 3;
      }
    }
    return {best, which};
  }

  void record_cut(int which) {
    if (which == 1) {
      ++stats_.cuts_ub1;
    } else if (which == 2) {
      ++stats_.cuts_ub2;
    } else {
      ++stats_.cuts_ub3;
    }
  }

  const BipartiteGraph& graph_;
  const SearchParams& params_;
  const Mode mode_;
  TopRSet top_;
  SubgraphView view_;
  SearchStats stats_;
  std::optional<Clock::time_point> deadline_;
};

SearchResult run_exact(const BipartiteGraph& graph, const SearchParams& params, Mode mode) {
  validate_params(params, mode == Mode::kUpperBound);
  return ExactSearcher(graph, params, mode).run();
}

}  // namespace

SearchResult basic_search(const BipartiteGraph& graph, const SearchParams& params) {
  return run_exact(graph, params, Mode::kBasic);
}

SearchResult slimtree_search(const BipartiteGraph& graph, const SearchParams& params) {
  return run_exact(graph, params, Mode::kSlimTree);
}

SearchResult upperbound_search(const BipartiteGraph& graph, const SearchParams& params) {
  return run_exact(graph, params, Mode::kUpperBound);
}

}  // namespace bicis
