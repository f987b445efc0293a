#include "bicis/community.hpp"

#include <algorithm>

#include "bicis/view.hpp"

namespace bicis {

Community make_community(const BipartiteGraph& graph, std::span<const VertexId> vertices) {
  Community c;
  for (VertexId v : vertices) {
    if (graph.is_upper(v)) {
      c.upper_ids.push_back(graph.layer_index(v));
    } else {
      c.lower_ids.push_back(graph.layer_index(v));
    }
  }
  std::sort(c.upper_ids.begin(), c.upper_ids.end());
  std::sort(c.lower_ids.begin(), c.lower_ids.end());
  c.influence = influence_of(graph, vertices);
  return c;
}

bool is_subcommunity(const Community& inner, const Community& outer) {
  return std::includes(outer.upper_ids.begin(), outer.upper_ids.end(), inner.upper_ids.begin(),
                       inner.upper_ids.end()) &&
         std::includes(outer.lower_ids.begin(), outer.lower_ids.end(), inner.lower_ids.begin(),
                       inner.lower_ids.end());
}

}  // namespace bicis
