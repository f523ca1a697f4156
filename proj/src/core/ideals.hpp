#ifndef SCROLL_CORE_IDEALS_HPP
#define SCROLL_CORE_IDEALS_HPP

#include <cstdint>
#include <vector>

#include "core/graphs.hpp"
#include "core/monideal.hpp"
#include "core/poly.hpp"

namespace scroll {

/// A presented ideal: ambient ring plus generators, tagged with whether it
/// is the full edge ideal in n+1 variables or its Artinian reduction.
struct IdealPresentation {
  enum class Provenance { full, artinian };
  PolyRing ring;
  std::vector<Polynomial> gens;
  Provenance provenance = Provenance::full;
};

/// The 2-minor x_i*x_{j+1} - x_{i+1}*x_j of the 2 x n Hankel matrix,
/// stored monic (leading coefficient 1 under degrevlex).
Polynomial edge_generator(const PolyRing& full_ring, int i, int j);

/// One generator per edge, in the ring K[x_1..x_{n+1}].
IdealPresentation build_ideal(std::int64_t prime, const ClosedGraph& g);

/// Predicted initial ideal: all degree-2 monomials in each clique block
/// {x_{a+1}, ..., x_b}, minimalized, in n+1 variables.
MonomialIdeal predicted_initial(const ClosedGraph& g);

/// Variable subscripts killed by the Artinian reduction: 1, n+1, and the
/// first vertex of every component after the first.
std::vector<int> killed_variable_ids(const ClosedGraph& g);
std::vector<int> surviving_variable_ids(const ClosedGraph& g);

/// Substitutes 0 for the killed variables, drops vanished generators, and
/// renormalizes monic; the result lives in the ring on the survivors.
IdealPresentation artinian_reduce(const IdealPresentation& p, const ClosedGraph& g);

/// predicted_initial transported to the reduced ring (the killed variables
/// never occur in it).
MonomialIdeal predicted_initial_reduced(const ClosedGraph& g);

/// A monomial ideal as an IdealPresentation over the given ring.
IdealPresentation monomial_presentation(std::int64_t prime, const PolyRing& ring,
                                        const MonomialIdeal& I,
                                        IdealPresentation::Provenance prov);

}  // namespace scroll

#endif
