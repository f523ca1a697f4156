#include "core/artinian.hpp"

#include <algorithm>
#include <unordered_map>

#include "core/errors.hpp"
#include "core/ideals.hpp"

namespace scroll {

std::vector<Monomial> quotient_basis(const PolyRing& ring, const GroebnerBasis& gb) {
  MonomialIdeal lead = initial_ideal(ring, gb);
  for (const auto& m : lead.gens)
    if (m.is_one()) return {};  // unit ideal, zero ring
  for (int v = 0; v < ring.nvars(); ++v) {
    bool has_pure_power = false;
    for (const auto& m : lead.gens)
      if (m.exponent(v) == m.degree()) {
        has_pure_power = true;
        break;
      }
    if (!has_pure_power)
      throw DimensionError("quotient is not Artinian: no pure power of " +
                           ring.var_name(v) + " among leading monomials");
  }
  // standard monomials form an order ideal: breadth-first closure from 1
  std::vector<Monomial> basis;
  std::unordered_map<Monomial, bool, MonomialHash> seen;
  std::vector<Monomial> frontier = {Monomial::one(ring.nvars())};
  seen[frontier.front()] = true;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      basis.push_back(m);
      for (int v = 0; v < ring.nvars(); ++v) {
        Monomial mv = mono_mul(m, Monomial::variable(ring.nvars(), v));
        if (seen.count(mv) || ideal_contains(lead, mv)) continue;
        seen[mv] = true;
        next.push_back(mv);
      }
    }
    frontier = std::move(next);
  }
  std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return cmp_degrevlex(a, b) == std::strong_ordering::less;
  });
  return basis;
}

ArtinianQuotient make_quotient(const PolyRing& ring, const GroebnerBasis& gb) {
  ArtinianQuotient q{PolyRing(ring.prime(), ring.var_ids()), gb, {}, {}};
  q.basis = quotient_basis(ring, gb);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (size_t k = 0; k < q.basis.size(); ++k)
    index[q.basis[k]] = static_cast<int>(k);
  int dim = q.dim();
  for (int v = 0; v < ring.nvars(); ++v) {
    FpMatrix op(dim, dim);
    for (int col = 0; col < dim; ++col) {
      Monomial mv = mono_mul(q.basis[static_cast<size_t>(col)],
                             Monomial::variable(ring.nvars(), v));
      Polynomial nf = normal_form(ring, poly_of_monomial(ring, mv), gb);
      for (const auto& t : nf.terms()) {
        auto it = index.find(t.mono);
        if (it == index.end())
          throw DimensionError("normal form left the standard-monomial basis");
        op.at(it->second, col) = t.coeff;
      }
    }
    q.mult_ops.push_back(std::move(op));
  }
  return q;
}

std::vector<std::int64_t> coordinates(const ArtinianQuotient& q, const Polynomial& f) {
  Polynomial nf = normal_form(q.ring, f, q.gb);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (size_t k = 0; k < q.basis.size(); ++k)
    index[q.basis[k]] = static_cast<int>(k);
  std::vector<std::int64_t> coords(q.basis.size(), 0);
  for (const auto& t : nf.terms()) {
    auto it = index.find(t.mono);
    if (it == index.end())
      throw DimensionError("normal form left the standard-monomial basis");
    coords[static_cast<size_t>(it->second)] = t.coeff;
  }
  return coords;
}

SocleBasis socle(const ArtinianQuotient& q) {
  int dim = q.dim();
  int nops = static_cast<int>(q.mult_ops.size());
  if (dim == 0) return SocleBasis{};
  FpMatrix stacked(nops * dim, dim);
  for (int v = 0; v < nops; ++v)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        stacked.at(v * dim + r, c) = q.mult_ops[static_cast<size_t>(v)].at(r, c);
  return SocleBasis{nullspace(q.ring.fp(), stacked)};
}

bool is_gorenstein_socle(std::int64_t prime, const ClosedGraph& g) {
  IdealPresentation reduced = artinian_reduce(build_ideal(prime, g), g);
  GroebnerBasis gb = buchberger(reduced.ring, reduced.gens);
  return socle(make_quotient(reduced.ring, gb)).dim() == 1;
}

bool is_gorenstein_criterion(const ClosedGraph& g) {
  for (const auto& comp : g.components) {
    int r = comp.clique_count();
    if (r == 1) {
      if (comp.hi - comp.lo != 1) return false;  // only an edge is Gorenstein
      continue;
    }
    if (comp.cliques[1].first != comp.lo + 1) return false;
    for (int i = 0; i + 2 < r; ++i)
      if (comp.cliques[static_cast<size_t>(i) + 2].first !=
          comp.cliques[static_cast<size_t>(i)].second + 1)
        return false;
    if (comp.cliques[static_cast<size_t>(r) - 2].second != comp.hi - 1) return false;
  }
  return true;
}

bool h_symmetric(const HVector& hv) {
  size_t s = hv.h.size();
  for (size_t i = 0; i < s; ++i)
    if (hv.h[i] != hv.h[s - 1 - i]) return false;
  return true;
}

}  // namespace scroll
