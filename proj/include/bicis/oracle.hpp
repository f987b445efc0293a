#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bicis/community.hpp"
#include "bicis/graph.hpp"
#include "bicis/rational.hpp"
#include "bicis/topr.hpp"

namespace bicis {

// Hard guard for subset enumeration: 2^22 subsets with early rejection is the
// largest instance the oracle will attempt.
inline constexpr std::uint32_t kOracleVertexLimit = 22;

struct CommunityDiagnostics {
  bool ids_sorted_unique = false;
  bool both_layers_nonempty = false;
  bool connected = false;
  bool cohesive = false;
  bool influence_matches = false;
  // Global id of the first vertex violating its degree threshold, if any.
  std::optional<VertexId> violating_vertex;
  // deg - threshold per member, upper ids first then lower ids.
  std::vector<std::int64_t> degree_slack;

  bool ok() const {
    return ids_sorted_unique && both_layers_nonempty && connected && cohesive &&
           influence_matches;
  }
};

struct EnumerationReport {
  // Every (alpha,beta)-influential community, ordered by influence
  // descending, then total size descending, then lexicographic ids.
  std::vector<Community> communities;
  std::uint64_t subsets_scanned = 0;
  // Connected cohesive subsets before the maximality filter.
  std::uint64_t candidates = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
};

// Ground truth by exhaustive subset enumeration; throws LimitError above
// kOracleVertexLimit vertices.
EnumerationReport enumerate_influential_communities(const BipartiteGraph& graph,
                                                    std::uint32_t alpha, std::uint32_t beta);

// First r entries of the enumeration order.
TopRSet brute_force_topr(const BipartiteGraph& graph, std::uint32_t alpha, std::uint32_t beta,
                         std::uint32_t r);

// Pure re-check of a candidate against the graph; out-of-range ids are a
// ValidationError, everything else lands in the diagnostics.
CommunityDiagnostics validate_community(const BipartiteGraph& graph, const Community& candidate,
                                        std::uint32_t alpha, std::uint32_t beta);

// The unipartite-to-bipartite reduction: every vertex becomes an upper and a
// lower mirror with the same weight, every edge (u,v) becomes
// (upper u, lower v) and (upper v, lower u). Rejects self-loops.
BipartiteGraph mirror_transform(std::uint32_t vertex_count,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                const std::vector<Weight>& weights);

struct ApproxQuality {
  std::size_t exact_count = 0;
  std::size_t approx_count = 0;
  // Rank-by-rank approx/exact influence; 0.0 for ranks the approximate set
  // does not cover.
  std::vector<double> per_rank_ratio;
  std::vector<std::string> per_rank_ratio_exact;
  double coverage = 0.0;
};

ApproxQuality approximation_ratio(const TopRSet& approx, const TopRSet& exact);

}  // namespace bicis
