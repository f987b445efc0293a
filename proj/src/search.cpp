#include "bicis/search.hpp"

#include "bicis/errors.hpp"

namespace bicis {

void validate_params(const SearchParams& params, bool needs_bounds) {
  if (params.alpha < 1 || params.beta < 1) {
    throw ValidationError("alpha and beta must be >= 1");
  }
  if (params.r < 1) throw ValidationError("r must be >= 1");
  if (needs_bounds && (params.bounds & kBoundAll) == 0) {
    throw ValidationError("upper-bound search needs at least one enabled bound");
  }
}

}  // namespace bicis
