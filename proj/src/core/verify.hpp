#ifndef SCROLL_CORE_VERIFY_HPP
#define SCROLL_CORE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/graphs.hpp"

namespace scroll {

struct Counterexample {
  ClosedGraph graph;
  std::string details;
};

struct VerificationReport {
  std::string statement;
  int n_max = 0;
  std::int64_t prime = 0;
  long long instances = 0;
  long long passes = 0;
  std::optional<Counterexample> counterexample;  // first failure, minimal
  std::vector<std::string> notes;
  double wall_ms = 0;
  bool all_pass() const { return passes == instances; }
};

/// Worked fixtures: the n=14 eight-clique graph, the n=15 eight-clique
/// graph with a late triple overlap, and the n=22 six-clique graph.
ClosedGraph fixture_n14();
ClosedGraph fixture_n15();
ClosedGraph fixture_n22();

/// reg(S/I_G) = r iff no three consecutive cliques intersect, for every
/// closed graph up to n_max (plus the large fixtures as extra instances).
VerificationReport verify_maxreg(int n_max, unsigned jobs = 0);

/// Socle-based and clique-criterion Gorenstein deciders agree; Gorenstein
/// instances have maximal regularity and a symmetric h-vector.
VerificationReport verify_gorenstein(int n_max, std::int64_t prime, unsigned jobs = 0);

/// Betti-table equality with the initial-ideal side for chains
/// (a_{i+1} = b_i), plus Betti polynomial factorization over cliques and
/// over connected components.
VerificationReport verify_betti_prop(int n_max, std::int64_t prime, unsigned jobs = 0);

/// Quadratic reduced bases, predicted initial ideals, regular-element
/// checks for the killed variables, and the standard-monomial count.
VerificationReport verify_structural(int n_max, std::int64_t prime, unsigned jobs = 0);

/// Exact checks pinned to the three worked fixtures: unique top standard
/// monomials, explicit socle elements, and a non-socle certificate.
VerificationReport verify_fixtures(std::int64_t prime);

/// Per-suite default sweep bounds.
int default_n_max(const std::string& suite);

/// Runs one suite by name (maxreg, gorenstein, betti, structural,
/// fixtures); n_max <= 0 selects the suite default.
VerificationReport run_suite(const std::string& suite, int n_max, std::int64_t prime,
                             unsigned jobs = 0);

/// All suites in order.
std::vector<VerificationReport> run_all_suites(int n_max, std::int64_t prime,
                                               unsigned jobs = 0);

}  // namespace scroll

#endif
