#include <doctest.h>

#include "core/errors.hpp"
#include "core/verify.hpp"

using namespace scroll;

TEST_CASE("maxreg sweep at n_max = 4") {
  VerificationReport r = verify_maxreg(4);
  CHECK(r.statement == "maxreg");
  // 1 + 2 + (5 connected + 1 split) graphs, plus the three large fixtures
  CHECK(r.instances == 9 + 3);
  CHECK(r.all_pass());
  CHECK_FALSE(r.counterexample.has_value());
  CHECK(r.passes <= r.instances);
}

TEST_CASE("gorenstein sweep at n_max = 5") {
  VerificationReport r = verify_gorenstein(5, 32003);
  CHECK(r.instances == 1 + 2 + 6 + 18);
  CHECK(r.all_pass());
}

TEST_CASE("betti sweep at n_max = 4") {
  VerificationReport r = verify_betti_prop(4, 32003);
  // applicable: [1,2]; [1,3]; [1,2][2,3]; [1,4]; [1,2][2,4]; [1,3][3,4];
  // [1,2][2,3][3,4]; [1,2][3,4]
  CHECK(r.instances == 8);
  CHECK(r.all_pass());
}

TEST_CASE("structural sweep at n_max = 4") {
  VerificationReport r = verify_structural(4, 32003);
  CHECK(r.instances == 9);
  CHECK(r.all_pass());
}

TEST_CASE("fixture suite is exact and green") {
  VerificationReport r = verify_fixtures(32003);
  CHECK(r.instances == 14);
  CHECK(r.all_pass());
  REQUIRE(!r.notes.empty());
  bool mentions_degree = false;
  for (const auto& note : r.notes)
    if (note.find("degree 6") != std::string::npos) mentions_degree = true;
  CHECK(mentions_degree);
}

TEST_CASE("suite dispatch") {
  CHECK(default_n_max("maxreg") == 10);
  CHECK(default_n_max("gorenstein") == 9);
  CHECK(default_n_max("betti") == 6);
  CHECK(default_n_max("structural") == 8);
  CHECK_THROWS_AS(default_n_max("bogus"), ParseError);
  VerificationReport r = run_suite("maxreg", 3, 32003);
  CHECK(r.n_max == 3);
  CHECK(r.all_pass());
  CHECK_THROWS_AS(run_suite("maxreg", 1, 32003), ValidationError);
}

TEST_CASE("fixture graphs match their defining cliques") {
  CHECK(fixture_n14().n == 14);
  CHECK(fixture_n14().clique_count() == 8);
  CHECK(fixture_n15().n == 15);
  CHECK(fixture_n15().clique_count() == 8);
  CHECK(fixture_n22().n == 22);
  CHECK(fixture_n22().clique_count() == 6);
}

TEST_CASE("sweeps are deterministic across worker counts") {
  VerificationReport one = verify_gorenstein(4, 32003, 1);
  VerificationReport many = verify_gorenstein(4, 32003, 4);
  CHECK(one.instances == many.instances);
  CHECK(one.passes == many.passes);
}
