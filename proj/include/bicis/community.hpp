#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bicis/graph.hpp"
#include "bicis/rational.hpp"

namespace bicis {

// One search result: both layers as sorted 0-based layer indices plus the
// exact influence of the induced subgraph. Both lists are nonempty.
struct Community {
  std::vector<std::uint32_t> upper_ids;
  std::vector<std::uint32_t> lower_ids;
  Rational influence;

  bool same_vertices(const Community& other) const {
    return upper_ids == other.upper_ids && lower_ids == other.lower_ids;
  }
  std::size_t size() const { return upper_ids.size() + lower_ids.size(); }
};

// Builds a Community from a sorted list of active global ids, computing the
// exact influence.
Community make_community(const BipartiteGraph& graph, std::span<const VertexId> vertices);

// True iff inner's vertex sets are (not necessarily strict) subsets of
// outer's, per layer. Linear merge over the sorted id lists.
bool is_subcommunity(const Community& inner, const Community& outer);

}  // namespace bicis
