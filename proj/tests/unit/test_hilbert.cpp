#include <doctest.h>

#include <set>

#include "core/artinian.hpp"
#include "core/errors.hpp"
#include "core/hilbert.hpp"
#include "core/ideals.hpp"

using namespace scroll;

namespace {
std::vector<long long> hv(const ClosedGraph& g) { return h_vector(g).h; }
}

TEST_CASE("h-vectors of the worked small graphs") {
  CHECK(hv(make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}})) ==
        std::vector<long long>{1, 3, 3, 1});
  CHECK(hv(make_closed_graph(5, {{1, 3}, {3, 5}})) ==
        std::vector<long long>{1, 4, 4});
  CHECK(hv(make_closed_graph(6, {{1, 3}, {2, 5}, {4, 6}})) ==
        std::vector<long long>{1, 5, 5, 1});
  CHECK(hv(make_closed_graph(3, {{1, 2}, {2, 3}})) ==
        std::vector<long long>{1, 2, 1});
  CHECK(hv(make_closed_graph(4, {{1, 4}})) == std::vector<long long>{1, 3});
}

TEST_CASE("standard monomial listings") {
  ClosedGraph path4 = make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  PolyRing r_path(32003, std::vector<int>{2, 3, 4});
  auto d3 = standard_monomials(path4, 3);
  REQUIRE(d3.size() == 1);
  CHECK(d3.front() == parse_monomial(r_path, "x2*x3*x4"));

  ClosedGraph chain = make_closed_graph(5, {{1, 3}, {3, 5}});
  PolyRing r_chain(32003, std::vector<int>{2, 3, 4, 5});
  auto d2 = standard_monomials(chain, 2);
  std::set<std::string> got;
  for (const auto& m : d2) got.insert(to_string(r_chain, m));
  CHECK(got == std::set<std::string>{"x2*x4", "x2*x5", "x3*x4", "x3*x5"});

  ClosedGraph big = make_closed_graph(
      14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}});
  PolyRing r_big(32003, surviving_variable_ids(big));
  auto d4 = standard_monomials(big, 4);
  REQUIRE(d4.size() == 1);
  CHECK(to_string(r_big, d4.front()) == "x2*x6*x10*x14");
}

TEST_CASE("regularity values") {
  CHECK(regularity(make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}})) == 3);
  CHECK(regularity(make_closed_graph(
            14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}})) == 4);
  for (int n = 2; n <= 7; ++n)
    CHECK(regularity(make_closed_graph(n, {{1, n}})) == 1);
}

TEST_CASE("maximal regularity criterion") {
  CHECK(has_max_regularity(make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}})));
  CHECK_FALSE(has_max_regularity(make_closed_graph(
      14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10}, {7, 12}, {8, 13}, {10, 14}})));
  CHECK(has_max_regularity(make_closed_graph(4, {{1, 3}, {2, 4}})));  // r = 2
  CHECK(has_max_regularity(make_closed_graph(5, {{1, 5}})));          // r = 1
}

TEST_CASE("witness monomial") {
  PolyRing r7(32003, std::vector<int>{2, 3, 4, 5, 6, 7});
  auto w = witness_monomial(make_closed_graph(7, {{1, 3}, {3, 5}, {5, 7}}));
  REQUIRE(w.has_value());
  CHECK(*w == parse_monomial(r7, "x2*x4*x7"));

  PolyRing r4(32003, std::vector<int>{2, 3, 4});
  auto wp = witness_monomial(make_closed_graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  REQUIRE(wp.has_value());
  CHECK(*wp == parse_monomial(r4, "x2*x3*x4"));

  PolyRing r3(32003, std::vector<int>{2, 3});
  auto we = witness_monomial(make_closed_graph(3, {{1, 2}, {2, 3}}));
  REQUIRE(we.has_value());
  CHECK(*we == parse_monomial(r3, "x2*x3"));

  CHECK_FALSE(witness_monomial(make_closed_graph(
                                   14, {{1, 5}, {2, 6}, {3, 8}, {4, 9}, {6, 10},
                                        {7, 12}, {8, 13}, {10, 14}}))
                  .has_value());

  SUBCASE("the witness is a standard monomial of degree r") {
    for (int n = 2; n <= 7; ++n)
      for (const auto& g : enumerate_connected(n)) {
        if (!has_max_regularity(g)) continue;
        auto wit = witness_monomial(g);
        REQUIRE(wit.has_value());
        int r = g.clique_count();
        CHECK(wit->degree() == r);
        auto all = standard_monomials(g, r);
        CHECK(std::count(all.begin(), all.end(), *wit) == 1);
      }
  }
}

TEST_CASE("hilbert series pairs") {
  auto [h1, d1] = hilbert_series(make_closed_graph(3, {{1, 2}, {2, 3}}));
  CHECK(h1.h == std::vector<long long>{1, 2, 1});
  CHECK(d1 == 2);
  auto [h2, d2] = hilbert_series(make_closed_graph(4, {{1, 2}, {3, 4}}));
  CHECK(h2.h == std::vector<long long>{1, 2, 1});
  CHECK(d2 == 3);
  auto [h3, d3] = hilbert_series(make_closed_graph(4, {{1, 4}}));
  CHECK(h3.h == std::vector<long long>{1, 3});
  CHECK(d3 == 2);
}

TEST_CASE("counting DP agrees with explicit listing") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& g : enumerate_connected(n)) {
      HVector h = h_vector(g);
      for (int d = 0; d <= h.degree() + 1; ++d) {
        long long listed = static_cast<long long>(standard_monomials(g, d).size());
        long long counted =
            d < static_cast<int>(h.h.size()) ? h.h[static_cast<size_t>(d)] : 0;
        CHECK(listed == counted);
      }
    }
}

TEST_CASE("h-vector agrees with the Groebner standard-monomial count") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_all(n)) {
      IdealPresentation reduced = artinian_reduce(build_ideal(32003, g), g);
      GroebnerBasis gb = buchberger(reduced.ring, reduced.gens);
      std::vector<Monomial> basis = quotient_basis(reduced.ring, gb);
      HVector h = h_vector(g);
      std::vector<long long> counts(static_cast<size_t>(h.degree()) + 1, 0);
      for (const auto& m : basis) {
        REQUIRE(m.degree() <= h.degree());
        ++counts[static_cast<size_t>(m.degree())];
      }
      CHECK(counts == h.h);
    }
}

TEST_CASE("disconnected h-vector is the product of component h-vectors") {
  ClosedGraph two_k2 = make_closed_graph(4, {{1, 2}, {3, 4}});
  CHECK(hv(two_k2) == std::vector<long long>{1, 2, 1});
  ClosedGraph mixed = make_closed_graph(7, {{1, 2}, {2, 4}, {5, 7}});
  // component [1,4] has h = (1,3,2), the triangle [5,7] has h = (1,2)
  CHECK(hv(mixed) == std::vector<long long>{1, 5, 8, 4});
}
