#pragma once

#include <span>

#include "bicis/graph.hpp"
#include "bicis/rational.hpp"
#include "bicis/search.hpp"
#include "bicis/view.hpp"

namespace bicis {

// The three exact top-r searches. All of them return the same influence
// multiset; they differ in how much of the deletion tree they visit:
//   basic       unconditional recursion per component vertex,
//   slimtree    each branch is peeled before recursing, and a branch whose
//               deletion cascade empties the core is skipped outright,
//   upperbound  slimtree plus branch cuts when min(enabled bounds) cannot
//               beat the ranking floor (TopRSet::min_influence()).
SearchResult basic_search(const BipartiteGraph& graph, const SearchParams& params);
SearchResult slimtree_search(const BipartiteGraph& graph, const SearchParams& params);
SearchResult upperbound_search(const BipartiteGraph& graph, const SearchParams& params);

// max upper weight + max lower weight. Both layers must be nonempty.
Rational ub1(const SubgraphView& view);

// (sum of upper weights) / beta + (sum of lower weights) / alpha. Dominates
// every core sub-view's influence because a nonempty (alpha,beta)-core has
// n_u >= beta, n_v >= alpha, and weights are nonnegative.
Rational ub2(const SubgraphView& view, std::uint32_t alpha, std::uint32_t beta);

// Single left-to-right accept/reject pass estimating the maximum subset
// average: accept when the clamped gain of adding at least matches the
// clamped gain of dropping (ties accept). avg of the empty set is 0.
Rational double_greedy_avg(std::span<const Weight> weights);

// 2 * double_greedy_avg per layer, summed; weights are fed in ascending
// vertex-id order. Both layers must be nonempty.
Rational ub3(const SubgraphView& view);

}  // namespace bicis
