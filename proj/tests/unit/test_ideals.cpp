#include <doctest.h>

#include <algorithm>

#include "core/errors.hpp"
#include "core/ideals.hpp"

using namespace scroll;

TEST_CASE("edge generators are the Hankel 2-minors, stored monic") {
  PolyRing ring(32003, 4);  // n = 3
  CHECK(edge_generator(ring, 1, 2) == parse_polynomial(ring, "x2^2 - x1*x3"));
  CHECK(edge_generator(ring, 2, 3) == parse_polynomial(ring, "x3^2 - x2*x4"));
  CHECK(edge_generator(ring, 1, 3) == parse_polynomial(ring, "x2*x3 - x1*x4"));
  // the minor itself: x_i x_{j+1} - x_{i+1} x_j = -(stored generator)
  Polynomial det = parse_polynomial(ring, "x1*x3 - x2^2");
  CHECK(poly_add(ring, det, edge_generator(ring, 1, 2)).is_zero());
  CHECK(edge_generator(ring, 1, 2).leading_term().coeff == 1);
  CHECK_THROWS_AS(edge_generator(ring, 0, 2), ValidationError);
  CHECK_THROWS_AS(edge_generator(ring, 2, 2), ValidationError);
  CHECK_THROWS_AS(edge_generator(ring, 1, 4), ValidationError);
}

TEST_CASE("ideal of a graph has one generator per edge") {
  IdealPresentation path = build_ideal(32003, make_closed_graph(3, {{1, 2}, {2, 3}}));
  CHECK(path.gens.size() == 2);
  CHECK(path.ring.nvars() == 4);
  CHECK(path.provenance == IdealPresentation::Provenance::full);

  IdealPresentation k3 = build_ideal(32003, make_closed_graph(3, {{1, 3}}));
  CHECK(k3.gens.size() == 3);

  ClosedGraph big = make_closed_graph(
      14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}});
  CHECK(build_ideal(32003, big).gens.size() ==
        edges_from_cliques(big).edges.size());
}

TEST_CASE("predicted initial ideal: squares of the clique blocks") {
  auto as_strings = [](const MonomialIdeal& I, const PolyRing& ring) {
    std::vector<std::string> out;
    for (const auto& m : I.gens) out.push_back(to_string(ring, m));
    return out;
  };

  PolyRing r5(32003, 5);
  MonomialIdeal path4 = predicted_initial(make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(as_strings(path4, r5) == std::vector<std::string>{"x2^2", "x3^2", "x4^2"});

  // K_5: all degree-2 monomials in x2..x5
  PolyRing r6(32003, 6);
  MonomialIdeal k5 = predicted_initial(make_closed_graph(5, {{1, 5}}));
  CHECK(k5.gens.size() == 10);
  for (const auto& m : k5.gens) {
    CHECK(m.degree() == 2);
    CHECK(m.exponent(0) == 0);
    CHECK(m.exponent(5) == 0);
  }

  MonomialIdeal chain = predicted_initial(make_closed_graph(5, {{1, 3}, {3, 5}}));
  CHECK(as_strings(chain, r6) ==
        std::vector<std::string>{"x2^2", "x2*x3", "x3^2", "x4^2", "x4*x5", "x5^2"});
}

TEST_CASE("artinian reduction") {
  SUBCASE("connected graphs lose x1 and x_{n+1}") {
    ClosedGraph path = make_closed_graph(3, {{1, 2}, {2, 3}});
    IdealPresentation reduced = artinian_reduce(build_ideal(32003, path), path);
    CHECK(reduced.ring.var_ids() == std::vector<int>{2, 3});
    REQUIRE(reduced.gens.size() == 2);
    CHECK(reduced.gens[0] == parse_polynomial(reduced.ring, "x3^2"));
    CHECK(reduced.gens[1] == parse_polynomial(reduced.ring, "x2^2"));
    CHECK(reduced.provenance == IdealPresentation::Provenance::artinian);
  }

  SUBCASE("triangle") {
    ClosedGraph k3 = make_closed_graph(3, {{1, 3}});
    IdealPresentation reduced = artinian_reduce(build_ideal(32003, k3), k3);
    std::vector<std::string> got;
    for (const auto& g : reduced.gens) got.push_back(to_string(reduced.ring, g));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x2*x3", "x2^2", "x3^2"});
  }

  SUBCASE("a later component loses its first vertex too") {
    ClosedGraph two = make_closed_graph(4, {{1, 2}, {3, 4}});
    CHECK(killed_variable_ids(two) == std::vector<int>{1, 3, 5});
    CHECK(surviving_variable_ids(two) == std::vector<int>{2, 4});
    IdealPresentation reduced = artinian_reduce(build_ideal(32003, two), two);
    std::vector<std::string> got;
    for (const auto& g : reduced.gens) got.push_back(to_string(reduced.ring, g));
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::string>{"x2^2", "x4^2"});
  }

  SUBCASE("reduced predicted initial never references killed variables") {
    for (int n = 2; n <= 6; ++n)
      for (const auto& g : enumerate_all(n)) {
        MonomialIdeal I = predicted_initial_reduced(g);
        CHECK(I.nvars == static_cast<int>(surviving_variable_ids(g).size()));
      }
  }
}

TEST_CASE("generator count matches the clique pair count") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : enumerate_all(n)) {
      long long pairs = 0;
      auto e = edges_from_cliques(g);
      pairs = static_cast<long long>(e.edges.size());
      CHECK(static_cast<long long>(build_ideal(32003, g).gens.size()) == pairs);
    }
}
