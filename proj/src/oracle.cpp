#include "bicis/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "bicis/errors.hpp"
#include "bicis/view.hpp"

namespace bicis {

namespace {

std::vector<VertexId> mask_vertices(std::uint32_t mask) {
  std::vector<VertexId> out;
  while (mask != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// upper-then-lower id sequence compare; masks enumerate global ids ascending,
// which is exactly that order.
bool lex_before(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  if (diff == 0) return false;
  return (a >> std::countr_zero(diff)) & 1u;
}

}  // namespace

EnumerationReport enumerate_influential_communities(const BipartiteGraph& graph,
                                                    std::uint32_t alpha, std::uint32_t beta) {
  if (alpha < 1 || beta < 1) throw ValidationError("alpha and beta must be >= 1");
  const std::uint32_t n = graph.vertex_count();
  if (n > kOracleVertexLimit) {
    throw LimitError("oracle enumeration refused: " + std::to_string(n) + " vertices exceeds " +
                     std::to_string(kOracleVertexLimit));
  }

  EnumerationReport report;
  report.alpha = alpha;
  report.beta = beta;

  std::vector<std::uint32_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : graph.neighbors(v)) adj[v] |= 1u << w;
  }
  const std::uint32_t upper_mask =
      graph.upper_count() == 0 ? 0 : (graph.upper_count() == 32 ? ~0u : (1u << graph.upper_count()) - 1);

  struct Candidate {
    std::uint32_t mask;
    Rational influence;
    bool maximal = true;
  };
  std::vector<Candidate> candidates;

  const std::uint64_t total = n >= 1 ? (1ull << n) : 1;
  for (std::uint64_t m = 1; m < total; ++m) {
    ++report.subsets_scanned;
    const auto mask = static_cast<std::uint32_t>(m);
    if ((mask & upper_mask) == 0 || (mask & ~upper_mask) == 0) continue;

    bool cohesive = true;
    for (std::uint32_t rest = mask; rest != 0 && cohesive; rest &= rest - 1) {
      const auto v = static_cast<VertexId>(std::countr_zero(rest));
      const auto deg = static_cast<std::uint32_t>(std::popcount(adj[v] & mask));
      cohesive = deg >= (graph.is_upper(v) ? alpha : beta);
    }
    if (!cohesive) continue;

    // Connectivity: closure from the lowest member.
    std::uint32_t reached = mask & (~mask + 1);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= adj[std::countr_zero(rest)];
      }
      frontier = next & mask & ~reached;
      reached |= frontier;
    }
    if (reached != mask) continue;

    const auto members = mask_vertices(mask);
    candidates.push_back({mask, influence_of(graph, members)});
  }
  report.candidates = candidates.size();

  // Maximality: drop candidates strictly contained in an equal-influence
  // candidate. Grouping by influence keeps the pairwise scan cheap.
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.influence > b.influence; });
  std::size_t group_begin = 0;
  while (group_begin < candidates.size()) {
    std::size_t group_end = group_begin + 1;
    while (group_end < candidates.size() &&
           candidates[group_end].influence == candidates[group_begin].influence) {
      ++group_end;
    }
    for (std::size_t i = group_begin; i < group_end; ++i) {
      for (std::size_t j = group_begin; j < group_end && candidates[i].maximal; ++j) {
        if (i == j) continue;
        const std::uint32_t a = candidates[i].mask;
        const std::uint32_t b = candidates[j].mask;
        if (a != b && (a & b) == a) candidates[i].maximal = false;
      }
    }
    group_begin = group_end;
  }
  std::erase_if(candidates, [](const Candidate& c) { return !c.maximal; });

  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.influence != b.influence) return a.influence > b.influence;
    const int sa = std::popcount(a.mask);
    const int sb = std::popcount(b.mask);
    if (sa != sb) return sa > sb;
    return lex_before(a.mask, b.mask);
  });

  report.communities.reserve(candidates.size());
  for (const Candidate& c : candidates) {
    report.communities.push_back(make_community(graph, mask_vertices(c.mask)));
  }
  return report;
}

TopRSet brute_force_topr(const BipartiteGraph& graph, std::uint32_t alpha, std::uint32_t beta,
                         std::uint32_t r) {
  const auto report = enumerate_influential_communities(graph, alpha, beta);
  TopRSet top(r);
  for (const Community& c : report.communities) top.insert(c);
  return top;
}

CommunityDiagnostics validate_community(const BipartiteGraph& graph, const Community& candidate,
                                        std::uint32_t alpha, std::uint32_t beta) {
  for (std::uint32_t u : candidate.upper_ids) {
    if (u >= graph.upper_count()) {
      throw ValidationError("upper id " + std::to_string(u + 1) + " out of range");
    }
  }
  for (std::uint32_t v : candidate.lower_ids) {
    if (v >= graph.lower_count()) {
      throw ValidationError("lower id " + std::to_string(v + 1) + " out of range");
    }
  }

  CommunityDiagnostics diag;
  auto sorted_unique = [](const std::vector<std::uint32_t>& ids) {
    return std::is_sorted(ids.begin(), ids.end()) &&
           std::adjacent_find(ids.begin(), ids.end()) == ids.end();
  };
  diag.ids_sorted_unique = sorted_unique(candidate.upper_ids) && sorted_unique(candidate.lower_ids);
  diag.both_layers_nonempty = !candidate.upper_ids.empty() && !candidate.lower_ids.empty();

  std::set<VertexId> members;
  for (std::uint32_t u : candidate.upper_ids) members.insert(graph.upper_vertex(u));
  for (std::uint32_t v : candidate.lower_ids) members.insert(graph.lower_vertex(v));

  diag.cohesive = true;
  for (VertexId v : members) {
    std::uint32_t deg = 0;
    for (VertexId w : graph.neighbors(v)) deg += members.count(w);
    const std::uint32_t threshold = graph.is_upper(v) ? alpha : beta;
    diag.degree_slack.push_back(static_cast<std::int64_t>(deg) - threshold);
    if (deg < threshold && diag.cohesive) {
      diag.cohesive = false;
      diag.violating_vertex = v;
    }
  }

  if (!members.empty()) {
    std::set<VertexId> reached;
    std::vector<VertexId> stack{*members.begin()};
    reached.insert(*members.begin());
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : graph.neighbors(v)) {
        if (members.count(w) && !reached.count(w)) {
          reached.insert(w);
          stack.push_back(w);
        }
      }
    }
    diag.connected = reached.size() == members.size();
  }

  if (diag.both_layers_nonempty) {
    const std::vector<VertexId> ids(members.begin(), members.end());
    diag.influence_matches = influence_of(graph, ids) == candidate.influence;
  }
  return diag;
}

BipartiteGraph mirror_transform(std::uint32_t vertex_count,
                                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                                const std::vector<Weight>& weights) {
  if (weights.size() != vertex_count) {
    throw ValidationError("mirror transform: weight count does not match vertex count");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bipartite_edges;
  bipartite_edges.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u == v) throw ValidationError("mirror transform: self-loops are not supported");
    if (u >= vertex_count || v >= vertex_count) {
      throw ValidationError("mirror transform: edge endpoint out of range");
    }
    bipartite_edges.emplace_back(u, v);
    bipartite_edges.emplace_back(v, u);
  }
  return BipartiteGraph(vertex_count, vertex_count, std::move(bipartite_edges), weights, weights);
}

ApproxQuality approximation_ratio(const TopRSet& approx, const TopRSet& exact) {
  ApproxQuality q;
  q.exact_count = exact.entries().size();
  q.approx_count = approx.entries().size();
  for (std::size_t i = 0; i < q.exact_count; ++i) {
    if (i >= q.approx_count) {
      q.per_rank_ratio.push_back(0.0);
      q.per_rank_ratio_exact.push_back("0");
      continue;
    }
    const Rational& a = approx.entries()[i].influence;
    const Rational& e = exact.entries()[i].influence;
    if (e.is_zero()) {
      const bool match = a == e;
      q.per_rank_ratio.push_back(match ? 1.0 : 0.0);
      q.per_rank_ratio_exact.push_back(match ? "1" : "0");
      continue;
    }
    const Rational ratio =
        Rational::from_ratio(a.numerator() * e.denominator(), a.denominator() * e.numerator());
    q.per_rank_ratio.push_back(ratio.to_double());
    q.per_rank_ratio_exact.push_back(ratio.to_string());
  }
  q.coverage = q.exact_count == 0
                   ? 1.0
                   : static_cast<double>(std::min(q.approx_count, q.exact_count)) /
                         static_cast<double>(q.exact_count);
  return q;
}

}  // namespace bicis
