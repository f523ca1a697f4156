#include "core/monideal.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace scroll {

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.nvars() != nvars)
      throw DimensionError("monomial ideal generator in the wrong ring");
  // ascending pass so every potential divisor is seen first
  std::sort(gens.begin(), gens.end(), DegrevlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (mono_divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::reverse(minimal.begin(), minimal.end());
  return MonomialIdeal{nvars, std::move(minimal)};
}

bool ideal_contains(const MonomialIdeal& I, const Monomial& m) {
  for (const auto& g : I.gens)
    if (mono_divides(g, m)) return true;
  return false;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.nvars == b.nvars && a.gens == b.gens;
}

namespace {

std::vector<long long> poly1_mul(const std::vector<long long>& a,
                                 const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<long long> poly1_add(std::vector<long long> a,
                                 const std::vector<long long>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// gens minimal. Pivot recursion: split at a variable occurring in a
// generator of degree >= 2.
std::vector<long long> numerator_rec(int nvars, std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};

  // all pure powers: N = prod (1 - t^deg)
  bool all_pure = true;
  for (const auto& g : gens)
    if (g.support().size() > 1) {
      all_pure = false;
      break;
    }
  if (all_pure) {
    std::vector<long long> n = {1};
    for (const auto& g : gens) {
      std::vector<long long> f(static_cast<size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f[static_cast<size_t>(g.degree())] = -1;
      n = poly1_mul(n, f);
    }
    return n;
  }

  // pivot: most frequent variable among generators of degree >= 2
  std::vector<int> freq(static_cast<size_t>(nvars), 0);
  for (const auto& g : gens) {
    if (g.degree() < 2) continue;
    for (int k : g.support()) ++freq[static_cast<size_t>(k)];
  }
  int pivot = 0;
  for (int k = 1; k < nvars; ++k)
    if (freq[static_cast<size_t>(k)] > freq[static_cast<size_t>(pivot)]) pivot = k;

  // I + (x_pivot)
  std::vector<Monomial> sum_gens = {Monomial::variable(nvars, pivot)};
  for (const auto& g : gens)
    if (g.exponent(pivot) == 0) sum_gens.push_back(g);
  // I : x_pivot
  std::vector<Monomial> colon_gens;
  for (const auto& g : gens) {
    if (g.exponent(pivot) == 0) {
      colon_gens.push_back(g);
    } else {
      std::vector<std::int32_t> e(g.exponents());
      e[static_cast<size_t>(pivot)] -= 1;
      colon_gens.push_back(Monomial::from_exponents(std::move(e)));
    }
  }
  MonomialIdeal colon = make_monomial_ideal(nvars, std::move(colon_gens));

  std::vector<long long> n_sum = numerator_rec(nvars, std::move(sum_gens));
  std::vector<long long> n_colon = numerator_rec(nvars, std::move(colon.gens));
  // HS(S/I) = HS(S/(I+x)) + t * HS(S/(I:x))
  std::vector<long long> shifted(n_colon.size() + 1, 0);
  for (size_t i = 0; i < n_colon.size(); ++i) shifted[i + 1] = n_colon[i];
  return poly1_add(std::move(n_sum), shifted);
}

}  // namespace

std::vector<long long> hilbert_numerator(const MonomialIdeal& I) {
  return numerator_rec(I.nvars, I.gens);
}

std::vector<long long> hilbert_function(const MonomialIdeal& I, int dmax) {
  std::vector<long long> hf(static_cast<size_t>(dmax) + 1, 0);
  std::vector<long long> n = hilbert_numerator(I);
  for (size_t d = 0; d < hf.size() && d < n.size(); ++d) hf[d] = n[d];
  // multiply by (1-t)^(-nvars): nvars rounds of prefix sums
  for (int round = 0; round < I.nvars; ++round)
    for (size_t d = 1; d < hf.size(); ++d) hf[d] += hf[d - 1];
  return hf;
}

std::vector<long long> divide_by_one_minus_t(std::vector<long long> coeffs, int power) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) return coeffs;
  for (int round = 0; round < power; ++round) {
    // synthetic division by (1 - t)
    std::vector<long long> q(coeffs.size(), 0);
    long long carry = 0;
    for (size_t d = 0; d < coeffs.size(); ++d) {
      carry += coeffs[d];
      q[d] = carry;
    }
    if (carry != 0) throw ValidationError("polynomial is not divisible by (1-t)");
    q.pop_back();
    coeffs = std::move(q);
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace scroll
