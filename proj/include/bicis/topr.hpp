#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bicis/community.hpp"
#include "bicis/rational.hpp"

namespace bicis {

// Ranked container with the maximality filter: no kept candidate is an
// equal-influence subgraph of another kept candidate. entries() exposes the
// top r; the container retains every accepted candidate behind them, because
// equal-influence entries can later merge into a common superset and shrink
// the ranked prefix — an evicted candidate could not be recovered then.
//
// min_influence() is the r-th DISTINCT influence value rather than the plain
// r-th entry: merges collapse entries only within one influence value, so
// the distinct-value rank never overcounts communities that are about to
// merge, and the gate never discards a candidate the final ranking needs.
// The accessor still reads minus-infinity while fewer than r distinct values
// are held.
class TopRSet {
 public:
  explicit TopRSet(std::uint32_t capacity);

  std::uint32_t capacity() const { return capacity_; }

  // Top min(r, kept) candidates, influence descending, insertion order
  // within ties.
  std::span<const Community> entries() const;

  Rational min_influence() const;

  // Candidate handling, with h_min = min_influence():
  //   f(h) <  h_min            -> unchanged.
  //   f(h) >  h_min            -> rejected iff an equal-influence kept
  //                               candidate contains h; otherwise
  //                               equal-influence candidates contained in h
  //                               are dropped and h is kept.
  //   f(h) == h_min            -> h replaces any equal-influence candidates
  //                               it strictly contains; otherwise unchanged.
  // The equality case goes beyond the strict ">" gate only to supersede
  // now-known-non-maximal candidates; it never changes the influence
  // multiset. Returns true when the container changed.
  bool insert(Community h);

 private:
  void drop_contained_in(const Community& h);
  void place(Community h);

  std::uint32_t capacity_;
  std::vector<Community> entries_;  // all kept candidates, sorted
};

}  // namespace bicis
