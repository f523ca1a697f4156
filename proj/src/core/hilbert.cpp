#include "core/hilbert.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace scroll {

namespace {

// Largest b over cliques whose block [a+1, b] contains j; the next chosen
// index after j must exceed this.
int block_reach(const CliqueComponent& comp, int j) {
  int reach = 0;
  for (const auto& [a, b] : comp.cliques)
    if (a + 1 <= j && j <= b) reach = std::max(reach, b);
  return reach;
}

std::vector<long long> component_h(const CliqueComponent& comp) {
  int r = comp.clique_count();
  // ways[j][d]: admissible d-subsets of [lo+1, hi] with maximum j
  std::vector<long long> h(static_cast<size_t>(r) + 1, 0);
  h[0] = 1;
  std::vector<std::vector<long long>> ways;
  std::vector<int> indices;
  for (int j = comp.lo + 1; j <= comp.hi; ++j) {
    std::vector<long long> w(static_cast<size_t>(r) + 1, 0);
    if (r >= 1) w[1] = 1;
    for (size_t k = 0; k < indices.size(); ++k) {
      if (block_reach(comp, indices[k]) >= j) continue;
      for (int d = 2; d <= r; ++d) w[static_cast<size_t>(d)] += ways[k][static_cast<size_t>(d) - 1];
    }
    for (int d = 1; d <= r; ++d) h[static_cast<size_t>(d)] += w[static_cast<size_t>(d)];
    ways.push_back(std::move(w));
    indices.push_back(j);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace

std::vector<Monomial> standard_monomials(const ClosedGraph& g, int d) {
  if (!g.connected())
    throw ValidationError("standard monomial listing requires a connected graph");
  if (d < 0) throw ValidationError("negative degree");
  const CliqueComponent& comp = g.components.front();
  int nvars = g.n - 1;  // ids 2..n
  std::vector<Monomial> out;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int next_min) -> void {
    if (static_cast<int>(chosen.size()) == d) {
      std::vector<std::int32_t> exps(static_cast<size_t>(nvars), 0);
      for (int j : chosen) exps[static_cast<size_t>(j - 2)] = 1;
      out.push_back(Monomial::from_exponents(std::move(exps)));
      return;
    }
    for (int j = next_min; j <= g.n; ++j) {
      chosen.push_back(j);
      self(self, block_reach(comp, j) + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 2);
  return out;
}

HVector h_vector(const ClosedGraph& g) {
  std::vector<long long> h = {1};
  for (const auto& comp : g.components) {
    std::vector<long long> ch = component_h(comp);
    std::vector<long long> prod(h.size() + ch.size() - 1, 0);
    for (size_t i = 0; i < h.size(); ++i)
      for (size_t j = 0; j < ch.size(); ++j) prod[i + j] += h[i] * ch[j];
    h = std::move(prod);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return HVector{std::move(h)};
}

int regularity(const ClosedGraph& g) { return h_vector(g).degree(); }

bool has_max_regularity(const ClosedGraph& g) {
  for (const auto& comp : g.components) {
    int r = comp.clique_count();
    for (int i = 0; i + 2 < r; ++i)
      if (comp.cliques[static_cast<size_t>(i) + 2].first <=
          comp.cliques[static_cast<size_t>(i)].second)
        return false;
  }
  return true;
}

std::optional<Monomial> witness_monomial(const ClosedGraph& g) {
  if (!g.connected())
    throw ValidationError("witness monomial requires a connected graph");
  if (!has_max_regularity(g)) return std::nullopt;
  const CliqueComponent& comp = g.components.front();
  int r = comp.clique_count();
  int nvars = g.n - 1;  // ids 2..n
  std::vector<std::int32_t> exps(static_cast<size_t>(nvars), 0);
  if (r == 1) {
    exps[0] = 1;  // x_2
  } else {
    exps[0] = 1;                                    // x_2
    exps[static_cast<size_t>(g.n) - 2] = 1;         // x_n
    for (int i = 0; i + 2 < r; ++i)
      exps[static_cast<size_t>(comp.cliques[static_cast<size_t>(i)].second) - 1] = 1;  // x_{b_i + 1}
  }
  return Monomial::from_exponents(std::move(exps));
}

std::pair<HVector, int> hilbert_series(const ClosedGraph& g) {
  return {h_vector(g), 1 + g.component_count()};
}

}  // namespace scroll
