#include "bicis/topr.hpp"

#include <algorithm>

#include "bicis/errors.hpp"

namespace bicis {

TopRSet::TopRSet(std::uint32_t capacity) : capacity_(capacity) {
  if (capacity == 0) throw ValidationError("top-r capacity must be >= 1");
}

std::span<const Community> TopRSet::entries() const {
  const std::size_t shown = std::min<std::size_t>(capacity_, entries_.size());
  return {entries_.data(), shown};
}

Rational TopRSet::min_influence() const {
  std::uint32_t distinct = 0;
  const Rational* prev = nullptr;
  for (const Community& e : entries_) {
    if (prev == nullptr || !(e.influence == *prev)) {
      prev = &e.influence;
      if (++distinct == capacity_) return e.influence;
    }
  }
  return Rational::minus_infinity();
}

void TopRSet::drop_contained_in(const Community& h) {
  std::erase_if(entries_, [&](const Community& e) {
    return e.influence == h.influence && !e.same_vertices(h) && is_subcommunity(e, h);
  });
}

void TopRSet::place(Community h) {
  auto pos = std::upper_bound(entries_.begin(), entries_.end(), h.influence,
                              [](const Rational& f, const Community& e) { return f > e.influence; });
  entries_.insert(pos, std::move(h));
}

bool TopRSet::insert(Community h) {
  const Rational h_min = min_influence();
  if (h.influence < h_min) return false;

  if (h.influence == h_min) {
    // Only a containment tie can change anything at the boundary: an
    // equal-influence candidate strictly inside h is not maximal once h
    // exists.
    bool supersedes = std::any_of(entries_.begin(), entries_.end(), [&](const Community& e) {
      return e.influence == h.influence && !e.same_vertices(h) && is_subcommunity(e, h);
    });
    if (!supersedes) return false;
    drop_contained_in(h);
    place(std::move(h));
    return true;
  }

  for (const Community& e : entries_) {
    if (e.influence == h.influence && is_subcommunity(h, e)) return false;
  }
  drop_contained_in(h);
  place(std::move(h));
  return true;
}

}  // namespace bicis
