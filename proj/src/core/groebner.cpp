#include "core/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "core/errors.hpp"

namespace scroll {

namespace {

// Divide f by the (not necessarily reduced) basis, full tail reduction.
// Divisor choice: first element whose leading monomial divides the term.
Polynomial divide(const PolyRing& ring, Polynomial f,
                  const std::vector<Polynomial>& basis) {
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Term lead = f.leading_term();
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis)
      if (!g.is_zero() && mono_divides(g.leading_monomial(), lead.mono)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      f = poly_sub(ring, f, make_polynomial(ring, {lead}));
    } else {
      Term q{ring.fp().mul(lead.coeff, ring.fp().inv(divisor->leading_term().coeff)),
             mono_div(lead.mono, divisor->leading_monomial())};
      f = poly_sub(ring, f, poly_mul_term(ring, q, *divisor));
    }
  }
  return make_polynomial(ring, std::move(remainder));
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f,
                        const Polynomial& g) {
  Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
  Term tf{ring.fp().inv(f.leading_term().coeff), mono_div(l, f.leading_monomial())};
  Term tg{ring.fp().inv(g.leading_term().coeff), mono_div(l, g.leading_monomial())};
  return poly_sub(ring, poly_mul_term(ring, tf, f), poly_mul_term(ring, tg, g));
}

}  // namespace

GroebnerBasis buchberger(const PolyRing& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(poly_monic(ring, std::move(g)));
  }

  using PairKey = std::tuple<int, size_t, size_t>;  // (lcm degree, i, j)
  std::set<PairKey> pending;
  auto push_pairs_with = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      int d = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
                  .degree();
      pending.insert({d, i, j});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_with(j);

  auto is_pending = [&](size_t a, size_t b) {
    if (a > b) std::swap(a, b);
    int d = mono_lcm(basis[a].leading_monomial(), basis[b].leading_monomial())
                .degree();
    return pending.count({d, a, b}) > 0;
  };

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    const Monomial& lmi = basis[i].leading_monomial();
    const Monomial& lmj = basis[j].leading_monomial();
    if (mono_coprime(lmi, lmj)) continue;  // first criterion
    // chain criterion: lm_k | lcm and both (i,k), (j,k) already treated
    Monomial l = mono_lcm(lmi, lmj);
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (mono_divides(basis[k].leading_monomial(), l) && !is_pending(i, k) &&
          !is_pending(j, k))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = divide(ring, s_polynomial(ring, basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(poly_monic(ring, std::move(r)));
    push_pairs_with(basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!mono_divides(basis[j].leading_monomial(), basis[i].leading_monomial()))
        continue;
      // equal leads: keep the earlier one
      if (basis[i].leading_monomial() == basis[j].leading_monomial())
        redundant = j < i;
      else
        redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce tails
  std::vector<Polynomial> reduced(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = poly_monic(ring, divide(ring, minimal[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
    return cmp_degrevlex(a.leading_monomial(), b.leading_monomial()) ==
           std::strong_ordering::greater;
  });
  return GroebnerBasis{std::move(reduced)};
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f,
                       const GroebnerBasis& gb) {
  return divide(ring, f, gb.gens);
}

bool in_ideal(const PolyRing& ring, const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(ring, f, gb).is_zero();
}

bool is_quadratic(const GroebnerBasis& gb) {
  for (const auto& g : gb.gens)
    if (g.degree() != 2) return false;
  return true;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  lms.reserve(gb.gens.size());
  for (const auto& g : gb.gens) lms.push_back(g.leading_monomial());
  return lms;
}

MonomialIdeal initial_ideal(const PolyRing& ring, const GroebnerBasis& gb) {
  return make_monomial_ideal(ring.nvars(), leading_monomials(gb));
}

bool colon_by_variable_equals(const PolyRing& ring, const GroebnerBasis& gb,
                              int var_pos, int degree_bound) {
  // 0 -> S/(I:x)(-1) -> S/I -> S/(I,x) -> 0 gives
  // HF(S/I, d) = HF(S/(I:x), d-1) + HF(S/(I,x), d); x is a nonzerodivisor
  // iff HF(S/(I:x)) = HF(S/I) in every degree.
  std::vector<long long> hf = hilbert_function(initial_ideal(ring, gb), degree_bound);
  std::vector<Polynomial> extended(gb.gens);
  extended.push_back(poly_variable(ring, var_pos));
  GroebnerBasis gbx = buchberger(ring, std::move(extended));
  std::vector<long long> hfx =
      hilbert_function(initial_ideal(ring, gbx), degree_bound);
  for (int d = 0; d <= degree_bound; ++d) {
    long long colon_part = hf[static_cast<size_t>(d)] - hfx[static_cast<size_t>(d)];
    long long full_part = d == 0 ? 0 : hf[static_cast<size_t>(d) - 1];
    if (colon_part != full_part) return false;
  }
  return true;
}

}  // namespace scroll
