#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bicis/errors.hpp"
#include "bicis/topr.hpp"

using namespace bicis;

namespace {

Community comm(std::vector<std::uint32_t> upper, std::vector<std::uint32_t> lower,
               std::int64_t num, std::int64_t den = 1) {
  return Community{std::move(upper), std::move(lower), Rational(num, den)};
}

}  // namespace

TEST_CASE("insert into an empty set") {
  TopRSet top(2);
  CHECK(top.min_influence().is_minus_infinity());
  CHECK(top.insert(comm({0}, {0}, 5)));
  REQUIRE(top.entries().size() == 1);
  CHECK(top.min_influence().is_minus_infinity());  // still underfilled
}

TEST_CASE("equal-influence subgraph of a kept entry is rejected") {
  TopRSet top(3);
  CHECK(top.insert(comm({0, 1, 2}, {0, 1, 2}, 4)));
  // Same influence, vertex sets contained in the entry above.
  CHECK_FALSE(top.insert(comm({0, 2}, {0, 1}, 4)));
  CHECK(top.entries().size() == 1);
  // Same vertices resubmitted: also a (non-strict) subgraph, rejected.
  CHECK_FALSE(top.insert(comm({0, 1, 2}, {0, 1, 2}, 4)));
  CHECK(top.entries().size() == 1);
}

TEST_CASE("full set with influence equal to h_min stays unchanged") {
  TopRSet top(2);
  top.insert(comm({0}, {0}, 9));
  top.insert(comm({1}, {1}, 7));
  CHECK(top.min_influence() == Rational(7, 1));
  CHECK_FALSE(top.insert(comm({2}, {2}, 7)));  // strict > gate
  CHECK(top.entries().size() == 2);
  CHECK(top.entries()[1].upper_ids == std::vector<std::uint32_t>{1});
}

TEST_CASE("a better candidate pushes the r-th entry out of the ranked view") {
  TopRSet top(2);
  top.insert(comm({0}, {0}, 9));
  top.insert(comm({1}, {1}, 7));
  CHECK(top.insert(comm({2}, {2}, 8)));
  REQUIRE(top.entries().size() == 2);
  CHECK(top.entries()[0].influence == Rational(9, 1));
  CHECK(top.entries()[1].influence == Rational(8, 1));
  CHECK(top.min_influence() == Rational(8, 1));
}

TEST_CASE("distinct-value rank keeps the gate below a mergeable tie") {
  // Two incomparable communities tie at 5; their common superset later
  // swallows both. The value 4 candidate must survive the intermediate
  // state, so the gate may not treat the tie as two ranks.
  TopRSet top(2);
  CHECK(top.insert(comm({0}, {0}, 5)));
  CHECK(top.insert(comm({1}, {1}, 5)));
  CHECK(top.min_influence().is_minus_infinity());  // one distinct value held
  CHECK(top.insert(comm({7}, {7}, 4)));
  CHECK(top.min_influence() == Rational(4, 1));
  CHECK(top.insert(comm({0, 1}, {0, 1}, 5)));  // swallows both ties
  REQUIRE(top.entries().size() == 2);
  CHECK(top.entries()[0].upper_ids == std::vector<std::uint32_t>{0, 1});
  CHECK(top.entries()[1].influence == Rational(4, 1));
}

TEST_CASE("superset with equal influence supersedes kept subsets") {
  SUBCASE("above the boundary") {
    TopRSet top(3);
    top.insert(comm({0}, {0}, 6));
    CHECK(top.insert(comm({0, 1}, {0, 1}, 6)));
    REQUIRE(top.entries().size() == 1);
    CHECK(top.entries()[0].upper_ids == std::vector<std::uint32_t>{0, 1});
  }
  SUBCASE("at the boundary") {
    TopRSet top(1);
    top.insert(comm({0}, {0}, 6));
    CHECK(top.min_influence() == Rational(6, 1));
    // Equal influence, but it strictly contains the kept entry, which is
    // therefore not maximal; the superset takes its place.
    CHECK(top.insert(comm({0, 1}, {0, 1}, 6)));
    REQUIRE(top.entries().size() == 1);
    CHECK(top.entries()[0].upper_ids == std::vector<std::uint32_t>{0, 1});
    // An unrelated equal-influence community still bounces off the gate.
    CHECK_FALSE(top.insert(comm({5}, {5}, 6)));
  }
}

TEST_CASE("entries keep influence order with stable ties") {
  TopRSet top(4);
  top.insert(comm({0}, {0}, 5));
  top.insert(comm({1}, {1}, 7));
  top.insert(comm({2}, {2}, 5));
  const auto& e = top.entries();
  REQUIRE(e.size() == 3);
  CHECK(e[0].influence == Rational(7, 1));
  CHECK(e[1].upper_ids == std::vector<std::uint32_t>{0});  // older tie first
  CHECK(e[2].upper_ids == std::vector<std::uint32_t>{2});
}

TEST_CASE("maximality invariant holds for arbitrary insert sequences") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    TopRSet top(1 + rng() % 4);
    for (int step = 0; step < 30; ++step) {
      // Nested vertex sets with few influence values force collisions.
      const std::uint32_t hi = 1 + rng() % 5;
      std::vector<std::uint32_t> upper, lower;
      for (std::uint32_t i = 0; i <= hi; ++i) {
        if (rng() % 2) upper.push_back(i);
        if (rng() % 2) lower.push_back(i);
      }
      if (upper.empty()) upper.push_back(0);
      if (lower.empty()) lower.push_back(0);
      top.insert(comm(std::move(upper), std::move(lower), 1 + rng() % 3));
    }
    const auto& e = top.entries();
    CHECK(e.size() <= top.capacity());
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      CHECK(e[i].influence >= e[i + 1].influence);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (i == j || e[i].influence != e[j].influence) continue;
        CHECK((e[i].same_vertices(e[j]) || !is_subcommunity(e[i], e[j])));
      }
    }
  }
}

TEST_CASE("capacity zero is rejected") { CHECK_THROWS_AS(TopRSet(0), ValidationError); }
