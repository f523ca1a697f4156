#include "core/ideals.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace scroll {

Polynomial edge_generator(const PolyRing& full_ring, int i, int j) {
  int n = full_ring.nvars() - 1;
  if (i < 1 || j <= i || j > n)
    throw ValidationError("edge generator indices out of range: (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
  auto var = [&](int id) { return Monomial::variable(full_ring.nvars(), id - 1); };
  // monic form: x_{i+1} x_j leads over x_i x_{j+1} in degrevlex
  return make_polynomial(full_ring, {Term{1, mono_mul(var(i + 1), var(j))},
                                     Term{-1, mono_mul(var(i), var(j + 1))}});
}

IdealPresentation build_ideal(std::int64_t prime, const ClosedGraph& g) {
  PolyRing ring(prime, g.n + 1);
  std::vector<Polynomial> gens;
  for (const auto& [i, j] : edges_from_cliques(g).edges)
    gens.push_back(edge_generator(ring, i, j));
  return IdealPresentation{std::move(ring), std::move(gens),
                           IdealPresentation::Provenance::full};
}

MonomialIdeal predicted_initial(const ClosedGraph& g) {
  int nvars = g.n + 1;
  std::vector<Monomial> gens;
  for (const auto& [a, b] : g.flat_cliques())
    for (int u = a + 1; u <= b; ++u)
      for (int v = u; v <= b; ++v)
        gens.push_back(mono_mul(Monomial::variable(nvars, u - 1),
                                Monomial::variable(nvars, v - 1)));
  return make_monomial_ideal(nvars, std::move(gens));
}

std::vector<int> killed_variable_ids(const ClosedGraph& g) {
  std::vector<int> killed = {1, g.n + 1};
  for (size_t c = 1; c < g.components.size(); ++c)
    killed.push_back(g.components[c].lo);
  std::sort(killed.begin(), killed.end());
  return killed;
}

std::vector<int> surviving_variable_ids(const ClosedGraph& g) {
  std::vector<int> killed = killed_variable_ids(g);
  std::vector<int> ids;
  for (int id = 1; id <= g.n + 1; ++id)
    if (!std::binary_search(killed.begin(), killed.end(), id)) ids.push_back(id);
  return ids;
}

IdealPresentation artinian_reduce(const IdealPresentation& p, const ClosedGraph& g) {
  if (p.ring.nvars() != g.n + 1)
    throw DimensionError("presentation does not match the graph's ambient ring");
  PolyRing reduced(p.ring.prime(), surviving_variable_ids(g));
  std::vector<Polynomial> gens;
  for (const auto& f : p.gens) {
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
      std::vector<std::int32_t> exps(static_cast<size_t>(reduced.nvars()), 0);
      bool killed = false;
      for (int pos = 0; pos < t.mono.nvars() && !killed; ++pos) {
        if (t.mono.exponent(pos) == 0) continue;
        int new_pos = reduced.position_of_id(p.ring.var_id(pos));
        if (new_pos < 0)
          killed = true;
        else
          exps[static_cast<size_t>(new_pos)] = t.mono.exponent(pos);
      }
      if (!killed) kept.push_back(Term{t.coeff, Monomial::from_exponents(std::move(exps))});
    }
    Polynomial reduced_gen = make_polynomial(reduced, std::move(kept));
    if (!reduced_gen.is_zero()) gens.push_back(poly_monic(reduced, reduced_gen));
  }
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    return cmp_degrevlex(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::less;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return IdealPresentation{std::move(reduced), std::move(gens),
                           IdealPresentation::Provenance::artinian};
}

MonomialIdeal predicted_initial_reduced(const ClosedGraph& g) {
  MonomialIdeal full = predicted_initial(g);
  PolyRing reduced(32003, surviving_variable_ids(g));  // prime irrelevant here
  std::vector<Monomial> gens;
  for (const auto& m : full.gens) {
    std::vector<std::int32_t> exps(static_cast<size_t>(reduced.nvars()), 0);
    for (int pos = 0; pos < m.nvars(); ++pos) {
      if (m.exponent(pos) == 0) continue;
      int new_pos = reduced.position_of_id(pos + 1);
      if (new_pos < 0)
        throw ValidationError("predicted initial ideal touches a killed variable");
      exps[static_cast<size_t>(new_pos)] = m.exponent(pos);
    }
    gens.push_back(Monomial::from_exponents(std::move(exps)));
  }
  return make_monomial_ideal(reduced.nvars(), std::move(gens));
}

IdealPresentation monomial_presentation(std::int64_t prime, const PolyRing& ring,
                                        const MonomialIdeal& I,
                                        IdealPresentation::Provenance prov) {
  if (I.nvars != ring.nvars())
    throw DimensionError("monomial ideal does not live in the given ring");
  std::vector<Polynomial> gens;
  for (const auto& m : I.gens) gens.push_back(poly_of_monomial(ring, m));
  return IdealPresentation{PolyRing(prime, ring.var_ids()), std::move(gens), prov};
}

}  // namespace scroll
