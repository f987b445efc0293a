#include "bicis.h"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <exception>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bicis/approx.hpp"
#include "bicis/errors.hpp"
#include "bicis/exact.hpp"
#include "bicis/generate.hpp"
#include "bicis/graph.hpp"
#include "bicis/io.hpp"
#include "bicis/oracle.hpp"
#include "bicis/search.hpp"

struct bicis_graph {
  bicis::BipartiteGraph graph;
};

struct bicis_result {
  std::vector<bicis::Community> communities;
  bicis_stats stats{};
};

namespace {

thread_local std::string g_last_error;

bicis_status fail(bicis_status status, const char* what) {
  g_last_error = what;
  return status;
}

template <typename Fn>
bicis_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return BICIS_OK;
  } catch (const bicis::ParseError& e) {
    return fail(BICIS_ERR_PARSE, e.what());
  } catch (const bicis::ValidationError& e) {
    return fail(BICIS_ERR_VALIDATION, e.what());
  } catch (const bicis::UsageError& e) {
    return fail(BICIS_ERR_USAGE, e.what());
  } catch (const bicis::LimitError& e) {
    return fail(BICIS_ERR_LIMIT, e.what());
  } catch (const bicis::IoError& e) {
    return fail(BICIS_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(BICIS_ERR_INTERNAL, e.what());
  }
}

void fill_stats(const bicis::SearchStats& s, bicis_stats* out) {
  *out = bicis_stats{};
  out->nodes_expanded = s.nodes_expanded;
  out->core_computations = s.core_computations;
  out->cuts_ub1 = s.cuts_ub1;
  out->cuts_ub2 = s.cuts_ub2;
  out->cuts_ub3 = s.cuts_ub3;
  out->slim_skips = s.slim_skips;
  out->vertices_expanded = s.vertices_expanded;
  out->prune_breaks = s.prune_breaks;
  out->wall_ms = s.wall.count();
  out->timed_out = s.timed_out ? 1 : 0;
}

}  // namespace

extern "C" {

const char* bicis_status_name(bicis_status status) {
  switch (status) {
    case BICIS_OK: return "ok";
    case BICIS_ERR_PARSE: return "parse error";
    case BICIS_ERR_VALIDATION: return "validation error";
    case BICIS_ERR_USAGE: return "usage error";
    case BICIS_ERR_LIMIT: return "limit exceeded";
    case BICIS_ERR_IO: return "io error";
    case BICIS_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* bicis_last_error(void) { return g_last_error.c_str(); }

bicis_status bicis_graph_load(const char* edge_path, const char* weight_path, bicis_graph** out) {
  if (edge_path == nullptr || out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = new bicis_graph{
        bicis::load_graph_files(edge_path, weight_path == nullptr ? "" : weight_path)};
  });
}

bicis_status bicis_graph_parse(const char* edge_text, const char* weight_text, bicis_graph** out) {
  if (edge_text == nullptr || out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] {
    std::istringstream edges(edge_text);
    if (weight_text == nullptr) {
      *out = new bicis_graph{bicis::load_graph(edges)};
    } else {
      std::istringstream weights(weight_text);
      *out = new bicis_graph{bicis::load_graph(edges, &weights)};
    }
  });
}

bicis_status bicis_graph_random(uint32_t n_upper, uint32_t n_lower, uint64_t m, uint64_t seed,
                                uint64_t w_max, bicis_graph** out) {
  if (out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] {
    *out = new bicis_graph{bicis::generate_random_bipartite(n_upper, n_lower, m, seed, w_max)};
  });
}

bicis_status bicis_graph_reweight(const bicis_graph* graph, uint64_t seed, uint64_t w_max,
                                  bicis_graph** out) {
  if (graph == nullptr || out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] { *out = new bicis_graph{bicis::generate_weights(graph->graph, seed, w_max)}; });
}

bicis_status bicis_graph_sample(const bicis_graph* graph, double fraction, uint64_t seed,
                                bicis_graph** out) {
  if (graph == nullptr || out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] { *out = new bicis_graph{bicis::sample_vertices(graph->graph, fraction, seed)}; });
}

bicis_status bicis_graph_write(const bicis_graph* graph, const char* edge_path,
                               const char* weight_path) {
  if (graph == nullptr || edge_path == nullptr || weight_path == nullptr) {
    return fail(BICIS_ERR_USAGE, "null argument");
  }
  return guarded([&] { bicis::write_graph_files(graph->graph, edge_path, weight_path); });
}

uint32_t bicis_graph_upper_count(const bicis_graph* graph) { return graph->graph.upper_count(); }
uint32_t bicis_graph_lower_count(const bicis_graph* graph) { return graph->graph.lower_count(); }
uint64_t bicis_graph_edge_count(const bicis_graph* graph) { return graph->graph.edge_count(); }
void bicis_graph_free(bicis_graph* graph) { delete graph; }

bicis_status bicis_search(const bicis_graph* graph, const bicis_params* params,
                          bicis_result** out) {
  if (graph == nullptr || params == nullptr || out == nullptr) {
    return fail(BICIS_ERR_USAGE, "null argument");
  }
  return guarded([&] {
    if (params->algo == BICIS_ALGO_ORACLE) {
      auto report = bicis::enumerate_influential_communities(graph->graph, params->alpha,
                                                             params->beta);
      bicis::TopRSet top(params->r);
      for (const auto& c : report.communities) top.insert(c);
      auto* result = new bicis_result{};
      result->communities.assign(top.entries().begin(), top.entries().end());
      result->stats.oracle_subsets_scanned = report.subsets_scanned;
      result->stats.oracle_candidates = report.candidates;
      *out = result;
      return;
    }
    bicis::SearchParams sp;
    sp.alpha = params->alpha;
    sp.beta = params->beta;
    sp.r = params->r;
    sp.bounds = params->bounds == 0 ? bicis::kBoundAll : params->bounds;
    if (params->time_limit_ms > 0) {
      sp.time_limit = std::chrono::milliseconds(params->time_limit_ms);
    }
    bicis::SearchResult sr = [&] {
      switch (params->algo) {
        case BICIS_ALGO_BASIC: return bicis::basic_search(graph->graph, sp);
        case BICIS_ALGO_SLIMTREE: return bicis::slimtree_search(graph->graph, sp);
        case BICIS_ALGO_UPPERBOUND: return bicis::upperbound_search(graph->graph, sp);
        case BICIS_ALGO_NEWFRA: return bicis::newfra_search(graph->graph, sp);
        case BICIS_ALGO_PRUNING: return bicis::pruning_search(graph->graph, sp);
        default: throw bicis::UsageError("unknown algorithm selector");
      }
    }();
    auto* result = new bicis_result{};
    result->communities.assign(sr.top.entries().begin(), sr.top.entries().end());
    fill_stats(sr.stats, &result->stats);
    *out = result;
  });
}

bicis_status bicis_enumerate(const bicis_graph* graph, uint32_t alpha, uint32_t beta,
                             bicis_result** out) {
  if (graph == nullptr || out == nullptr) return fail(BICIS_ERR_USAGE, "null argument");
  return guarded([&] {
    auto report = bicis::enumerate_influential_communities(graph->graph, alpha, beta);
    auto* result = new bicis_result{};
    result->communities = std::move(report.communities);
    result->stats.oracle_subsets_scanned = report.subsets_scanned;
    result->stats.oracle_candidates = report.candidates;
    *out = result;
  });
}

size_t bicis_result_size(const bicis_result* result) { return result->communities.size(); }

static size_t copy_ids(const std::vector<uint32_t>& ids, uint32_t* buf, size_t cap) {
  if (buf != nullptr) {
    const size_t n = cap < ids.size() ? cap : ids.size();
    for (size_t i = 0; i < n; ++i) buf[i] = ids[i] + 1;
  }
  return ids.size();
}

size_t bicis_result_upper_ids(const bicis_result* result, size_t index, uint32_t* buf,
                              size_t cap) {
  if (index >= result->communities.size()) return 0;
  return copy_ids(result->communities[index].upper_ids, buf, cap);
}

size_t bicis_result_lower_ids(const bicis_result* result, size_t index, uint32_t* buf,
                              size_t cap) {
  if (index >= result->communities.size()) return 0;
  return copy_ids(result->communities[index].lower_ids, buf, cap);
}

int bicis_result_influence(const bicis_result* result, size_t index, char* buf, size_t cap) {
  if (index >= result->communities.size()) return -1;
  const std::string s = result->communities[index].influence.to_string();
  if (buf != nullptr && cap > 0) {
    std::snprintf(buf, cap, "%s", s.c_str());
  }
  return static_cast<int>(s.size());
}

double bicis_result_influence_value(const bicis_result* result, size_t index) {
  if (index >= result->communities.size()) return 0.0;
  return result->communities[index].influence.to_double();
}

void bicis_result_stats(const bicis_result* result, bicis_stats* out) {
  if (out != nullptr) *out = result->stats;
}

void bicis_result_free(bicis_result* result) { delete result; }

}  // extern "C"
