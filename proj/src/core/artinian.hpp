#ifndef SCROLL_CORE_ARTINIAN_HPP
#define SCROLL_CORE_ARTINIAN_HPP

#include <cstdint>
#include <vector>

#include "core/graphs.hpp"
#include "core/groebner.hpp"
#include "core/hilbert.hpp"
#include "core/linalg.hpp"
#include "core/poly.hpp"

namespace scroll {

/// Finite-dimensional graded algebra presented on its standard-monomial
/// basis, with one multiplication matrix per ring variable.
struct ArtinianQuotient {
  PolyRing ring;
  GroebnerBasis gb;
  std::vector<Monomial> basis;      // ascending degree, ascending degrevlex
  std::vector<FpMatrix> mult_ops;   // mult_ops[v] column j = coords of x_v * basis[j]
  int dim() const { return static_cast<int>(basis.size()); }
  int top_degree() const { return basis.empty() ? -1 : basis.back().degree(); }
};

/// All monomials outside the initial ideal. Requires an Artinian ideal
/// (a pure power of every variable among the leading monomials); throws
/// DimensionError otherwise.
std::vector<Monomial> quotient_basis(const PolyRing& ring, const GroebnerBasis& gb);

ArtinianQuotient make_quotient(const PolyRing& ring, const GroebnerBasis& gb);

/// Coordinates of the normal form of f in the quotient basis.
std::vector<std::int64_t> coordinates(const ArtinianQuotient& q, const Polynomial& f);

struct SocleBasis {
  std::vector<std::vector<std::int64_t>> vectors;
  int dim() const { return static_cast<int>(vectors.size()); }
};

/// Basis of the annihilator of the maximal ideal: the simultaneous kernel
/// of all multiplication matrices, via one stacked elimination.
SocleBasis socle(const ArtinianQuotient& q);

/// Socle-based Gorenstein test on the extended Artinian reduction of I_G.
bool is_gorenstein_socle(std::int64_t prime, const ClosedGraph& g);

/// Numerical test from the clique data, per component: a component is
/// Gorenstein iff it is an edge (r = 1, two vertices) or r >= 2 with
/// a_2 = lo+1, a_{i+2} = b_i + 1, b_{r-1} = hi - 1.
bool is_gorenstein_criterion(const ClosedGraph& g);

bool h_symmetric(const HVector& h);

}  // namespace scroll

#endif
