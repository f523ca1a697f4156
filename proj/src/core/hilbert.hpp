#ifndef SCROLL_CORE_HILBERT_HPP
#define SCROLL_CORE_HILBERT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "core/graphs.hpp"
#include "core/monomial.hpp"

namespace scroll {

/// Coefficients of the Hilbert series numerator P(t), h_0 = 1, trailing
/// zeros stripped.
struct HVector {
  std::vector<long long> h;
  int degree() const { return static_cast<int>(h.size()) - 1; }
  bool operator==(const HVector& o) const { return h == o.h; }
};

/// Standard monomials of degree d for a connected graph: squarefree
/// monomials in x_2..x_n picking at most one index from each clique block
/// [a_i+1, b_i]. Lives in the reduced ring on ids 2..n.
std::vector<Monomial> standard_monomials(const ClosedGraph& g, int d);

/// h-vector by interval DP; product of component h-polynomials when the
/// graph is disconnected.
HVector h_vector(const ClosedGraph& g);

/// deg P(t); equals the regularity of S/I_G.
int regularity(const ClosedGraph& g);

/// True iff every component's cliques satisfy a_{i+2} > b_i for all i,
/// i.e. no three consecutive cliques intersect.
bool has_max_regularity(const ClosedGraph& g);

/// For a connected graph with maximal regularity: the degree-r standard
/// monomial x_2 x_{b_1+1} ... x_{b_{r-2}+1} x_n (x_2 when r = 1), in the
/// reduced ring. Empty when the criterion fails.
std::optional<Monomial> witness_monomial(const ClosedGraph& g);

/// (P(t) coefficients, Krull dimension 1 + #components); the Hilbert
/// series of S/I_G is P(t)/(1-t)^dim.
std::pair<HVector, int> hilbert_series(const ClosedGraph& g);

}  // namespace scroll

#endif
