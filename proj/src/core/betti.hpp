#ifndef SCROLL_CORE_BETTI_HPP
#define SCROLL_CORE_BETTI_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "core/graphs.hpp"
#include "core/hilbert.hpp"
#include "core/ideals.hpp"

namespace scroll {

/// Graded Betti numbers beta_{i,j} of a quotient ring, zero entries absent.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  long long at(int i, int j) const;
  void set(int i, int j, long long v);
  int max_homological() const;  // largest i with a nonzero entry
  long long column_total(int i) const;
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Betti polynomial product B(s,t) = B1 * B2 (convolution of tables).
BettiTable product(const BettiTable& a, const BettiTable& b);

/// B(s,t) = sum beta_{i,j} s^i t^j in readable form, e.g. "1 + 2*s*t^2 + s^2*t^4".
std::string betti_polynomial_text(const BettiTable& t);

/// max j - i over nonzero entries (0 for the zero ideal's table).
int regularity_from_table(const BettiTable& t);

/// beta_{i,j} via Koszul homology on the surviving variables; requires an
/// Artinian presentation.
BettiTable koszul_betti(const IdealPresentation& p);

/// The same Tor computation in the full ring on all n+1 variables, graded
/// strands truncated at internal basis degree max_degree. Entries with
/// j - i <= max_degree - 1 are exact. For small-n cross-checks.
BettiTable koszul_betti_full(const IdealPresentation& p, int max_degree);

/// Closed form for beta_{i,i+1} of the two-clique graph [1,n-1],[2,n].
long long extremal_betti_formula(int n, int i);

/// The full expected table of that graph: the linear strand, plus the
/// final socle entry beta_{n-1,n+1} = 1.
BettiTable extremal_betti_table(int n);

/// Checks the Betti polynomial factorization: over connected components
/// when the graph is disconnected, over cliques when the graph is
/// connected with a_{i+1} = b_i throughout.
bool product_formula_check(std::int64_t prime, const ClosedGraph& g);

/// Prop-style equality of tables: binomial quotient vs quotient by the
/// predicted initial ideal (both Artinian-reduced). Requires a connected
/// graph with a_{i+1} = b_i for all i.
bool verify_betti_equality(std::int64_t prime, const ClosedGraph& g);

/// Gorenstein iff the last homological column has total 1, concentrated in
/// internal degree (n - c) + reg.
bool gorenstein_by_betti(std::int64_t prime, const ClosedGraph& g);

/// K-polynomial identity: sum_i (-1)^i beta_{i,j} t^j == h(t) * (1-t)^k,
/// coefficient-wise, where k is the number of surviving variables.
bool euler_identity_holds(const BettiTable& t, const HVector& h, int k);

/// Component as a standalone connected graph on [1, hi-lo+1].
ClosedGraph component_graph(const CliqueComponent& comp);

BettiTable betti_of_graph(std::int64_t prime, const ClosedGraph& g);

}  // namespace scroll

#endif
