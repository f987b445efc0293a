/*
 * bicis - top-r influential community search in vertex-weighted bipartite
 * graphs. C interface of the shared library: opaque handles, status codes,
 * thread-local error messages via bicis_last_error().
 */
#ifndef BICIS_H
#define BICIS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bicis_status {
  BICIS_OK = 0,
  BICIS_ERR_PARSE = 1,      /* malformed input text           */
  BICIS_ERR_VALIDATION = 2, /* domain constraint violated     */
  BICIS_ERR_USAGE = 3,      /* API precondition broken        */
  BICIS_ERR_LIMIT = 4,      /* size guard exceeded            */
  BICIS_ERR_IO = 5,         /* file not readable/writable     */
  BICIS_ERR_INTERNAL = 6
} bicis_status;

typedef enum bicis_algo {
  BICIS_ALGO_BASIC = 0,
  BICIS_ALGO_SLIMTREE = 1,
  BICIS_ALGO_UPPERBOUND = 2,
  BICIS_ALGO_NEWFRA = 3,
  BICIS_ALGO_PRUNING = 4,
  BICIS_ALGO_ORACLE = 5 /* brute-force enumeration, small graphs only */
} bicis_algo;

#define BICIS_BOUND_UB1 1u
#define BICIS_BOUND_UB2 2u
#define BICIS_BOUND_UB3 4u
#define BICIS_BOUND_ALL 7u

typedef struct bicis_graph bicis_graph;
typedef struct bicis_result bicis_result;

const char* bicis_status_name(bicis_status status);

/* Message of the last failing call on this thread; empty string if none. */
const char* bicis_last_error(void);

/*
 * Graph construction. Edge files: '%' comment lines, "<u> <v> [ignored...]"
 * with 1-based ids. Weight files: "U <id> <w>" / "V <id> <w>" lines.
 * weight_path/weight_text may be NULL (all weights default to 1).
 */
bicis_status bicis_graph_load(const char* edge_path, const char* weight_path, bicis_graph** out);
bicis_status bicis_graph_parse(const char* edge_text, const char* weight_text, bicis_graph** out);

/* m distinct uniform edges plus uniform weights in [1, w_max]; deterministic per seed. */
bicis_status bicis_graph_random(uint32_t n_upper, uint32_t n_lower, uint64_t m, uint64_t seed,
                                uint64_t w_max, bicis_graph** out);

/* Structural copy with fresh uniform weights in [1, w_max]. */
bicis_status bicis_graph_reweight(const bicis_graph* graph, uint64_t seed, uint64_t w_max,
                                  bicis_graph** out);

/* Induced subgraph on a uniform vertex sample per layer, fraction in (0, 1]. */
bicis_status bicis_graph_sample(const bicis_graph* graph, double fraction, uint64_t seed,
                                bicis_graph** out);

bicis_status bicis_graph_write(const bicis_graph* graph, const char* edge_path,
                               const char* weight_path);

uint32_t bicis_graph_upper_count(const bicis_graph* graph);
uint32_t bicis_graph_lower_count(const bicis_graph* graph);
uint64_t bicis_graph_edge_count(const bicis_graph* graph);
void bicis_graph_free(bicis_graph* graph);

typedef struct bicis_params {
  uint32_t alpha;         /* >= 1 */
  uint32_t beta;          /* >= 1 */
  uint32_t r;             /* >= 1 */
  uint32_t bounds;        /* OR of BICIS_BOUND_*, 0 means all */
  int64_t time_limit_ms;  /* <= 0 means unlimited */
  bicis_algo algo;
} bicis_params;

typedef struct bicis_stats {
  uint64_t nodes_expanded;
  uint64_t core_computations;
  uint64_t cuts_ub1;
  uint64_t cuts_ub2;
  uint64_t cuts_ub3;
  uint64_t slim_skips;
  uint64_t vertices_expanded;
  uint64_t prune_breaks;
  uint64_t oracle_subsets_scanned; /* BICIS_ALGO_ORACLE only */
  uint64_t oracle_candidates;      /* BICIS_ALGO_ORACLE only */
  int64_t wall_ms;
  int timed_out; /* search hit the time limit; result holds partial output */
} bicis_stats;

/*
 * Runs the selected algorithm. A timeout is not an error: the call returns
 * BICIS_OK with stats.timed_out set and the best results found so far.
 */
bicis_status bicis_search(const bicis_graph* graph, const bicis_params* params,
                          bicis_result** out);

/* Every influential community of the graph, in the oracle's deterministic order. */
bicis_status bicis_enumerate(const bicis_graph* graph, uint32_t alpha, uint32_t beta,
                             bicis_result** out);

size_t bicis_result_size(const bicis_result* result);

/*
 * Vertex ids of community `index`, written 1-based into buf (up to cap
 * entries). Returns the full count, so calling with cap 0 sizes the buffer.
 */
size_t bicis_result_upper_ids(const bicis_result* result, size_t index, uint32_t* buf, size_t cap);
size_t bicis_result_lower_ids(const bicis_result* result, size_t index, uint32_t* buf, size_t cap);

/*
 * Exact influence as a fraction string ("5", "11/2"). Returns the length
 * excluding the terminator (snprintf convention).
 */
int bicis_result_influence(const bicis_result* result, size_t index, char* buf, size_t cap);
double bicis_result_influence_value(const bicis_result* result, size_t index);

void bicis_result_stats(const bicis_result* result, bicis_stats* out);
void bicis_result_free(bicis_result* result);

#ifdef __cplusplus
}
#endif

#endif /* BICIS_H */
