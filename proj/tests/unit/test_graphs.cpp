#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "core/graphs.hpp"
#include "support/oracles.hpp"

using namespace scroll;

namespace {

EdgeList edges(int n, const std::vector<std::pair<int, int>>& pairs) {
  EdgeList e;
  e.n = n;
  for (auto [a, b] : pairs) e.edges.insert({std::min(a, b), std::max(a, b)});
  return e;
}

std::vector<Interval> flat(const ClosedGraph& g) { return g.flat_cliques(); }

}  // namespace

TEST_CASE("closedness in the given labeling") {
  CHECK(is_closed(edges(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(is_closed(edges(3, {{1, 3}})));
  EdgeList k5 = edges(5, {});
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) k5.edges.insert({i, j});
  CHECK(is_closed(k5));
}

TEST_CASE("maximal cliques from edges") {
  CHECK(flat(cliques_from_edges(edges(4, {{1, 2}, {2, 3}, {3, 4}}))) ==
        std::vector<Interval>{{1, 2}, {2, 3}, {3, 4}});
  EdgeList k4 = edges(4, {});
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) k4.edges.insert({i, j});
  CHECK(flat(cliques_from_edges(k4)) == std::vector<Interval>{{1, 4}});

  SUBCASE("the eight-clique fixture round-trips through its edges") {
    std::vector<Interval> cl = {{1, 5}, {2, 6}, {3, 8}, {4, 9},
                                {6, 10}, {7, 12}, {8, 13}, {10, 14}};
    ClosedGraph g = make_closed_graph(14, cl);
    CHECK(flat(cliques_from_edges(edges_from_cliques(g))) == cl);
  }

  SUBCASE("errors") {
    CHECK_THROWS_AS(cliques_from_edges(edges(3, {{1, 3}})), ValidationError);
    CHECK_THROWS_AS(cliques_from_edges(edges(3, {{1, 2}})), ValidationError);  // 3 isolated
    CHECK_THROWS_AS(cliques_from_edges(edges(1, {})), ValidationError);
  }
}

TEST_CASE("edges from cliques") {
  ClosedGraph tri = make_closed_graph(3, {{1, 3}});
  CHECK(edges_from_cliques(tri).edges ==
        std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  ClosedGraph path = make_closed_graph(3, {{1, 2}, {2, 3}});
  CHECK(edges_from_cliques(path).edges ==
        std::set<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("graph constructor invariants") {
  CHECK_THROWS_AS(make_closed_graph(3, {{1, 1}, {1, 3}}), ValidationError);
  CHECK_THROWS_AS(make_closed_graph(4, {{1, 2}}), ValidationError);       // misses n
  CHECK_THROWS_AS(make_closed_graph(4, {{2, 4}}), ValidationError);       // misses 1
  CHECK_THROWS_AS(make_closed_graph(5, {{1, 2}, {4, 5}}), ValidationError);  // gap at 3
  CHECK_THROWS_AS(make_closed_graph(4, {{1, 3}, {2, 3}}), ValidationError);  // b not rising
  CHECK_THROWS_AS(make_closed_graph(4, {{1, 3}, {1, 4}}), ValidationError);  // a not rising

  ClosedGraph two = make_closed_graph(4, {{1, 2}, {3, 4}});
  CHECK(two.component_count() == 2);
  CHECK(two.components[0].lo == 1);
  CHECK(two.components[0].hi == 2);
  CHECK(two.components[1].lo == 3);
  CHECK(two.components[1].hi == 4);
}

TEST_CASE("connected enumeration counts frozen from the brute-force oracle") {
  CHECK(enumerate_connected(2).size() == 1);
  CHECK(enumerate_connected(3).size() == 2);
  CHECK(enumerate_connected(4).size() == 5);
  CHECK(enumerate_connected(5).size() == 14);
  CHECK(enumerate_connected(6).size() == 42);
}

TEST_CASE("full enumeration counts: compositions of connected counts") {
  CHECK(enumerate_all(2).size() == 1);
  CHECK(enumerate_all(4).size() == 6);
  CHECK(enumerate_all(5).size() == 18);
}

TEST_CASE("enumeration matches the brute-force filter exactly") {
  for (int n = 2; n <= 6; ++n) {
    for (bool connected_only : {true, false}) {
      std::set<oracles::EdgeSet> brute;
      for (auto& e : oracles::closed_graphs_brute(n, connected_only))
        brute.insert(std::move(e));
      std::set<oracles::EdgeSet> enumerated;
      auto graphs = connected_only ? enumerate_connected(n) : enumerate_all(n);
      for (const auto& g : graphs) {
        auto e = edges_from_cliques(g);
        enumerated.insert(oracles::EdgeSet(e.edges.begin(), e.edges.end()));
      }
      CHECK(enumerated.size() == graphs.size());  // no duplicates
      CHECK(enumerated == brute);
    }
  }
}

TEST_CASE("enumeration is sorted in flattened lexicographic order") {
  for (int n : {4, 5, 6}) {
    auto graphs = enumerate_all(n);
    for (size_t k = 0; k + 1 < graphs.size(); ++k)
      CHECK(flat_lex_less(graphs[k], graphs[k + 1]));
  }
}

TEST_CASE("clique/edge round trip over the full enumeration") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_all(n)) {
      ClosedGraph back = cliques_from_edges(edges_from_cliques(g));
      CHECK(flat(back) == flat(g));
    }
}

TEST_CASE("triple-intersection criterion equals the interval inequality") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_all(n))
      for (const auto& comp : g.components)
        for (size_t i = 0; i + 2 < comp.cliques.size(); ++i) {
          auto [a1, b1] = comp.cliques[i];
          auto [a2, b2] = comp.cliques[i + 1];
          auto [a3, b3] = comp.cliques[i + 2];
          int lo = std::max({a1, a2, a3});
          int hi = std::min({b1, b2, b3});
          bool empty_intersection = lo > hi;
          CHECK(empty_intersection == (a3 > b1));
        }
}

TEST_CASE("random closed graphs are valid and deterministic") {
  ClosedGraph a = random_closed(6, 0);
  ClosedGraph b = random_closed(6, 0);
  CHECK(flat(a) == flat(b));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    ClosedGraph g = random_closed(10, seed);
    CHECK(is_closed(edges_from_cliques(g)));
    // constructor re-validation is the invariant check
    CHECK(flat(make_closed_graph(g.n, flat(g))) == flat(g));
  }
}
