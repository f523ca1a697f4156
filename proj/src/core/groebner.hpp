#ifndef SCROLL_CORE_GROEBNER_HPP
#define SCROLL_CORE_GROEBNER_HPP

#include <vector>

#include "core/monideal.hpp"
#include "core/poly.hpp"

namespace scroll {

/// Reduced Groebner basis under degrevlex: every element monic, no term of
/// any element divisible by the leading monomial of another, elements
/// sorted by descending leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> gens;
};

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm degree, ties by generator indices) and the coprimality and chain
/// criteria. Empty input yields the zero ideal's empty basis.
GroebnerBasis buchberger(const PolyRing& ring, std::vector<Polynomial> gens);

/// Unique remainder of f on division by gb; no term of the result is
/// divisible by any leading monomial of gb.
Polynomial normal_form(const PolyRing& ring, const Polynomial& f,
                       const GroebnerBasis& gb);

bool in_ideal(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb);

/// True iff every basis element has total degree 2 (vacuously true for the
/// zero ideal).
bool is_quadratic(const GroebnerBasis& gb);

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb);
MonomialIdeal initial_ideal(const PolyRing& ring, const GroebnerBasis& gb);

/// Decides (I : x_v) = I, i.e. whether x_v is a nonzerodivisor on S/I, by
/// comparing Hilbert functions of S/I and S/(I, x_v) up to degree_bound
/// through the multiplication exact sequence.
bool colon_by_variable_equals(const PolyRing& ring, const GroebnerBasis& gb,
                              int var_pos, int degree_bound);

}  // namespace scroll

#endif
