#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "bicis/rational.hpp"
#include "bicis/topr.hpp"

namespace bicis {

class SubgraphView;

enum BoundMask : std::uint32_t {
  kBoundUb1 = 1u << 0,
  kBoundUb2 = 1u << 1,
  kBoundUb3 = 1u << 2,
  kBoundAll = kBoundUb1 | kBoundUb2 | kBoundUb3,
};

struct SearchParams {
  std::uint32_t alpha = 1;
  std::uint32_t beta = 1;
  std::uint32_t r = 1;
  // Bounds participating in the upper-bound search's minimum.
  std::uint32_t bounds = kBoundAll;
  // Cooperative wall-clock budget, checked at every recursion entry.
  std::optional<std::chrono::milliseconds> time_limit;
  // Test hook: called with the view and the minimum enabled bound right
  // before each prune decision of the upper-bound search.
  std::function<void(const SubgraphView&, const Rational&)> bound_audit;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;     // recursion entries (exact searches)
  std::uint64_t core_computations = 0;  // peeling passes
  std::uint64_t cuts_ub1 = 0;
  std::uint64_t cuts_ub2 = 0;
  std::uint64_t cuts_ub3 = 0;
  std::uint64_t slim_skips = 0;         // branches elided: cascade emptied the core
  std::uint64_t vertices_expanded = 0;  // queue pops (greedy searches)
  std::uint64_t prune_breaks = 0;       // early exits of the pruning search
  std::chrono::milliseconds wall{0};
  bool timed_out = false;
};

struct SearchResult {
  TopRSet top;
  SearchStats stats;
};

// Throws ValidationError on out-of-range parameters.
void validate_params(const SearchParams& params, bool needs_bounds);

}  // namespace bicis
