#ifndef SCROLL_CORE_MONIDEAL_HPP
#define SCROLL_CORE_MONIDEAL_HPP

#include <vector>

#include "core/monomial.hpp"

namespace scroll {

/// Monomial ideal given by its minimal generators, sorted descending in
/// degrevlex. No generator divides another.
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Monomial> gens;
};

/// Minimalizes and sorts an arbitrary generating set.
MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens);

bool ideal_contains(const MonomialIdeal& I, const Monomial& m);
bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

/// Numerator N(t) of the Hilbert series HS(S/I) = N(t) / (1-t)^nvars,
/// as a coefficient vector indexed by degree.
std::vector<long long> hilbert_numerator(const MonomialIdeal& I);

/// Hilbert function values dim (S/I)_d for d = 0..dmax.
std::vector<long long> hilbert_function(const MonomialIdeal& I, int dmax);

/// Divides a polynomial (coefficient vector) by (1-t)^power; throws if the
/// division leaves a remainder.
std::vector<long long> divide_by_one_minus_t(std::vector<long long> coeffs, int power);

}  // namespace scroll

#endif
