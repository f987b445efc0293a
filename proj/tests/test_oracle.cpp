#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bicis/errors.hpp"
#include "bicis/generate.hpp"
#include "bicis/oracle.hpp"
#include "support/testutil.hpp"

using namespace bicis;
using testutil::complete_graph;
using testutil::make_graph;

TEST_CASE("K22 has exactly one (2,2) community") {
  const auto g = complete_graph(2, 2, {1, 2}, {3, 4});
  const auto report = enumerate_influential_communities(g, 2, 2);
  REQUIRE(report.communities.size() == 1);
  CHECK(report.communities[0].upper_ids == std::vector<std::uint32_t>{0, 1});
  CHECK(report.communities[0].lower_ids == std::vector<std::uint32_t>{0, 1});
  CHECK(report.communities[0].influence == Rational(5, 1));
}

TEST_CASE("edgeless graph has no communities") {
  const auto g = make_graph(3, 3, {});
  CHECK(enumerate_influential_communities(g, 1, 1).communities.empty());
}

TEST_CASE("pendant fixture enumeration, frozen") {
  // K22 on u1,u2 x v1,v2 (u weights 1, v weights 2) plus pendant u3-v1 with
  // weight 4. Hand enumeration for alpha=beta=1:
  //   {u3},{v1}            f = 6
  //   {u1,u3},{v1,v2}      f = 9/2
  //   {u2,u3},{v1,v2}      f = 9/2
  //   all five             f = 4    (pendant-inclusive)
  //   {u1,u2},{v1,v2}      f = 3    (core-only)
  // Everything else is an equal-influence strict subset of one of these.
  const auto g = make_graph(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}}, {1, 1, 4}, {2, 2});
  const auto report = enumerate_influential_communities(g, 1, 1);
  REQUIRE(report.communities.size() == 5);

  auto expect = [&](std::size_t i, std::vector<std::uint32_t> up, std::vector<std::uint32_t> lo,
                    Rational f) {
    CHECK(report.communities[i].upper_ids == up);
    CHECK(report.communities[i].lower_ids == lo);
    CHECK(report.communities[i].influence == f);
  };
  expect(0, {2}, {0}, Rational(6, 1));
  expect(1, {0, 2}, {0, 1}, Rational(9, 2));
  expect(2, {1, 2}, {0, 1}, Rational(9, 2));
  expect(3, {0, 1, 2}, {0, 1}, Rational(4, 1));
  expect(4, {0, 1}, {0, 1}, Rational(3, 1));
}

TEST_CASE("enumeration is internally consistent on random instances") {
  std::mt19937_64 seeds(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t nu = 2 + seeds() % 4;
    const std::uint32_t nv = 2 + seeds() % 4;
    const auto g = generate_random_bipartite(
        nu, nv, seeds() % (static_cast<std::uint64_t>(nu) * nv + 1), seeds(), 4);
    const std::uint32_t alpha = 1 + seeds() % 3;
    const std::uint32_t beta = 1 + seeds() % 3;
    const auto report = enumerate_influential_communities(g, alpha, beta);

    std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> seen;
    for (const auto& c : report.communities) {
      CHECK(validate_community(g, c, alpha, beta).ok());
      CHECK(seen.insert({c.upper_ids, c.lower_ids}).second);  // pairwise distinct
    }
    // The maximality relation holds inside the report.
    for (const auto& a : report.communities) {
      for (const auto& b : report.communities) {
        if (&a == &b || a.influence != b.influence) continue;
        CHECK((a.same_vertices(b) || !is_subcommunity(a, b)));
      }
    }
    // Deterministic: a second run reproduces the report exactly.
    const auto again = enumerate_influential_communities(g, alpha, beta);
    REQUIRE(again.communities.size() == report.communities.size());
    for (std::size_t i = 0; i < report.communities.size(); ++i) {
      CHECK(again.communities[i].same_vertices(report.communities[i]));
    }
  }
}

TEST_CASE("brute_force_topr") {
  SUBCASE("r beyond the community count returns everything") {
    const auto g = complete_graph(2, 2);
    const auto top = brute_force_topr(g, 2, 2, 10);
    CHECK(top.entries().size() == 1);
  }
  SUBCASE("two components, the heavier one wins rank 1") {
    auto edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>{
        {0, 0}, {0, 1}, {1, 0}, {1, 1},  // light component
        {2, 2}, {2, 3}, {3, 2}, {3, 3},  // heavy component
    };
    const auto g = make_graph(4, 4, std::move(edges), {1, 1, 9, 9}, {1, 1, 9, 9});
    const auto top = brute_force_topr(g, 2, 2, 1);
    REQUIRE(top.entries().size() == 1);
    CHECK(top.entries()[0].upper_ids == std::vector<std::uint32_t>{2, 3});
    CHECK(top.entries()[0].influence == Rational(18, 1));
  }
}

TEST_CASE("oracle guard refuses large graphs") {
  const auto g = generate_random_bipartite(12, 12, 30, 3, 5);
  CHECK_THROWS_AS(enumerate_influential_communities(g, 1, 1), LimitError);
}

TEST_CASE("validate_community diagnostics") {
  const auto g = complete_graph(2, 2, {1, 2}, {3, 4});
  SUBCASE("a true core component passes") {
    const auto diag = validate_community(g, Community{{0, 1}, {0, 1}, Rational(5, 1)}, 2, 2);
    CHECK(diag.ok());
    CHECK(diag.degree_slack == std::vector<std::int64_t>{0, 0, 0, 0});
  }
  SUBCASE("dropping a vertex from a tight core breaks cohesiveness") {
    const auto diag = validate_community(g, Community{{0}, {0, 1}, Rational(9, 2)}, 2, 2);
    CHECK_FALSE(diag.cohesive);
    REQUIRE(diag.violating_vertex.has_value());
    CHECK(*diag.violating_vertex == g.lower_vertex(0));
  }
  SUBCASE("wrong stored influence is reported") {
    const auto diag = validate_community(g, Community{{0, 1}, {0, 1}, Rational(6, 1)}, 2, 2);
    CHECK_FALSE(diag.influence_matches);
    CHECK(diag.connected);
    CHECK(diag.cohesive);
  }
  SUBCASE("disconnected candidate is reported") {
    auto edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {1, 1}};
    const auto g2 = make_graph(2, 2, std::move(edges));
    const auto diag = validate_community(g2, Community{{0, 1}, {0, 1}, Rational(2, 1)}, 1, 1);
    CHECK_FALSE(diag.connected);
    CHECK(diag.cohesive);
  }
  SUBCASE("out-of-range ids throw") {
    CHECK_THROWS_AS(validate_community(g, Community{{7}, {0}, Rational(1, 1)}, 1, 1),
                    ValidationError);
  }
}

TEST_CASE("mirror transform of the weighted triangle") {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> triangle{{0, 1}, {1, 2}, {0, 2}};
  const auto g = mirror_transform(3, triangle, {1, 2, 3});
  CHECK(g.upper_count() == 3);
  CHECK(g.lower_count() == 3);
  CHECK(g.edge_count() == 6);
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 2);
  // Unipartite 2-core of the triangle is the whole triangle, average weight
  // 2; the mirror's (2,2) top-1 influence doubles it.
  const auto top = brute_force_topr(g, 2, 2, 1);
  REQUIRE(top.entries().size() == 1);
  CHECK(top.entries()[0].influence == Rational(4, 1));
  CHECK(top.entries()[0].upper_ids.size() == 3);
  CHECK(top.entries()[0].lower_ids.size() == 3);
}

TEST_CASE("mirror transform rejects self-loops") {
  CHECK_THROWS_AS(mirror_transform(2, {{0, 0}}, {1, 1}), ValidationError);
}

TEST_CASE("mirror facts on random unipartite graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint32_t n = 3 + rng() % 6;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> deg(n, 0);
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = u + 1; v < n; ++v) {
        if (rng() % 2) {
          edges.emplace_back(u, v);
          ++deg[u];
          ++deg[v];
        }
      }
    }
    std::vector<Weight> w(n);
    for (auto& x : w) x = 1 + rng() % 9;

    const auto g = mirror_transform(n, edges, w);
    CHECK(g.edge_count() == 2 * edges.size());
    for (std::uint32_t v = 0; v < n; ++v) {
      CHECK(g.degree(g.upper_vertex(v)) == deg[v]);
      CHECK(g.degree(g.lower_vertex(v)) == deg[v]);
      CHECK(g.weight(g.upper_vertex(v)) == g.weight(g.lower_vertex(v)));
    }
    // Swapping layers is an automorphism: (upper u, lower v) implies
    // (upper v, lower u).
    for (std::uint32_t u = 0; u < n; ++u) {
      for (VertexId x : g.neighbors(g.upper_vertex(u))) {
        const std::uint32_t v = g.layer_index(x);
        bool mirrored = false;
        for (VertexId y : g.neighbors(g.upper_vertex(v))) {
          mirrored |= g.layer_index(y) == u;
        }
        CHECK(mirrored);
      }
    }
  }
}

TEST_CASE("approximation_ratio metrics") {
  TopRSet exact(2), approx(2), empty(2);
  exact.insert(Community{{0}, {0}, Rational(8, 1)});
  exact.insert(Community{{1}, {1}, Rational(4, 1)});
  approx.insert(Community{{0}, {0}, Rational(8, 1)});
  approx.insert(Community{{1}, {1}, Rational(4, 1)});

  SUBCASE("identical sets give all ratios 1") {
    const auto q = approximation_ratio(approx, exact);
    CHECK(q.coverage == 1.0);
    REQUIRE(q.per_rank_ratio.size() == 2);
    CHECK(q.per_rank_ratio[0] == 1.0);
    CHECK(q.per_rank_ratio_exact[1] == "1");
  }
  SUBCASE("empty approximation is zero coverage, not an error") {
    const auto q = approximation_ratio(empty, exact);
    CHECK(q.coverage == 0.0);
    CHECK(q.per_rank_ratio == std::vector<double>{0.0, 0.0});
  }
  SUBCASE("partial coverage") {
    TopRSet one(2);
    one.insert(Community{{0}, {0}, Rational(6, 1)});
    const auto q = approximation_ratio(one, exact);
    CHECK(q.coverage == 0.5);
    CHECK(q.per_rank_ratio[0] == doctest::Approx(0.75));
    CHECK(q.per_rank_ratio[1] == 0.0);
  }
}
