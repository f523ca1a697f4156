#include "core/betti.hpp"

#include <algorithm>
#include <unordered_map>

#include "core/artinian.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace scroll {

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long long v) {
  if (v == 0)
    entries.erase({i, j});
  else
    entries[{i, j}] = v;
}

int BettiTable::max_homological() const {
  int m = 0;
  for (const auto& [ij, v] : entries)
    if (v != 0) m = std::max(m, ij.first);
  return m;
}

long long BettiTable::column_total(int i) const {
  long long total = 0;
  for (const auto& [ij, v] : entries)
    if (ij.first == i) total += v;
  return total;
}

BettiTable product(const BettiTable& a, const BettiTable& b) {
  BettiTable c;
  for (const auto& [ij1, v1] : a.entries)
    for (const auto& [ij2, v2] : b.entries)
      c.set(ij1.first + ij2.first, ij1.second + ij2.second,
            c.at(ij1.first + ij2.first, ij1.second + ij2.second) + v1 * v2);
  return c;
}

std::string betti_polynomial_text(const BettiTable& t) {
  if (t.entries.empty()) return "0";
  std::string s;
  for (const auto& [ij, v] : t.entries) {
    auto [i, j] = ij;
    if (!s.empty()) s += " + ";
    std::string factors;
    if (i == 1) factors += "s";
    if (i > 1) factors += "s^" + std::to_string(i);
    if (j >= 1) {
      if (!factors.empty()) factors += "*";
      factors += j == 1 ? "t" : "t^" + std::to_string(j);
    }
    if (factors.empty())
      s += std::to_string(v);
    else if (v == 1)
      s += factors;
    else
      s += std::to_string(v) + "*" + factors;
  }
  return s;
}

int regularity_from_table(const BettiTable& t) {
  int reg = 0;
  for (const auto& [ij, v] : t.entries)
    if (v != 0) reg = std::max(reg, ij.second - ij.first);
  return reg;
}

namespace {

// Graded multiplication tables of a quotient ring R = S/I, degrees
// 0..dmax: basis_by_degree[d] lists the standard monomials of degree d,
// mult[d][v][idx] expands x_v * basis in degree d+1 coordinates.
struct GradedMult {
  int k = 0;  // variable count
  std::vector<int> dims;
  std::vector<std::vector<std::vector<std::vector<std::pair<int, std::int64_t>>>>> mult;
};

GradedMult graded_from_quotient(const ArtinianQuotient& q) {
  GradedMult gm;
  gm.k = q.ring.nvars();
  int top = q.top_degree();
  std::vector<std::vector<int>> globals_by_degree(static_cast<size_t>(top) + 1);
  std::vector<std::pair<int, int>> local_of(q.basis.size());  // (degree, local idx)
  for (size_t g = 0; g < q.basis.size(); ++g) {
    int d = q.basis[g].degree();
    local_of[g] = {d, static_cast<int>(globals_by_degree[static_cast<size_t>(d)].size())};
    globals_by_degree[static_cast<size_t>(d)].push_back(static_cast<int>(g));
  }
  gm.dims.resize(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    gm.dims[static_cast<size_t>(d)] =
        static_cast<int>(globals_by_degree[static_cast<size_t>(d)].size());
  gm.mult.resize(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    auto& level = gm.mult[static_cast<size_t>(d)];
    level.resize(static_cast<size_t>(gm.k));
    for (int v = 0; v < gm.k; ++v) {
      level[static_cast<size_t>(v)].resize(
          static_cast<size_t>(gm.dims[static_cast<size_t>(d)]));
      for (int idx = 0; idx < gm.dims[static_cast<size_t>(d)]; ++idx) {
        int gcol = globals_by_degree[static_cast<size_t>(d)][static_cast<size_t>(idx)];
        for (int grow = 0; grow < q.dim(); ++grow) {
          std::int64_t c = q.mult_ops[static_cast<size_t>(v)].at(grow, gcol);
          if (c == 0) continue;
          auto [dd, li] = local_of[static_cast<size_t>(grow)];
          if (dd != d + 1)
            throw DimensionError("multiplication operator is not graded");
          level[static_cast<size_t>(v)][static_cast<size_t>(idx)].push_back({li, c});
        }
      }
    }
  }
  return gm;
}

std::vector<std::vector<int>> subsets_of_size(int k, int size) {
  std::vector<std::vector<int>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> c(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) c[static_cast<size_t>(i)] = i;
  if (size > k) return out;
  while (true) {
    out.push_back(c);
    int i = size - 1;
    while (i >= 0 && c[static_cast<size_t>(i)] == k - size + i) --i;
    if (i < 0) break;
    ++c[static_cast<size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      c[static_cast<size_t>(j)] = c[static_cast<size_t>(j) - 1] + 1;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Betti numbers from Koszul strand ranks; entries with j - i <= max_shift
// are reported.
BettiTable koszul_core(const Fp& fp, const GradedMult& gm, int max_shift) {
  int k = gm.k;
  auto dim_at = [&](int d) {
    if (d < 0 || d >= static_cast<int>(gm.dims.size())) return 0;
    return gm.dims[static_cast<size_t>(d)];
  };

  std::vector<std::vector<std::vector<int>>> subsets(static_cast<size_t>(k) + 1);
  std::vector<std::unordered_map<std::uint64_t, int>> subset_index(
      static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    subsets[static_cast<size_t>(i)] = subsets_of_size(k, i);
    for (size_t s = 0; s < subsets[static_cast<size_t>(i)].size(); ++s) {
      std::uint64_t mask = 0;
      for (int t : subsets[static_cast<size_t>(i)][s]) mask |= 1ull << t;
      subset_index[static_cast<size_t>(i)][mask] = static_cast<int>(s);
    }
  }

  // rank of d_{i,j} : K_{i,j} -> K_{i-1,j}
  std::map<std::pair<int, int>, int> rank_memo;
  auto differential_rank = [&](int i, int j) -> int {
    if (i < 1 || i > k) return 0;
    auto it = rank_memo.find({i, j});
    if (it != rank_memo.end()) return it->second;
    int src_deg = j - i;
    int rows = static_cast<int>(subsets[static_cast<size_t>(i) - 1].size()) *
               dim_at(src_deg + 1);
    int cols = static_cast<int>(subsets[static_cast<size_t>(i)].size()) * dim_at(src_deg);
    int r = 0;
    if (rows > 0 && cols > 0 && src_deg >= 0 &&
        src_deg < static_cast<int>(gm.mult.size())) {
      int tdim = dim_at(src_deg + 1);
      FpMatrix m(rows, cols);
      for (size_t s = 0; s < subsets[static_cast<size_t>(i)].size(); ++s) {
        const auto& T = subsets[static_cast<size_t>(i)][s];
        std::uint64_t mask = 0;
        for (int t : T) mask |= 1ull << t;
        for (int b = 0; b < dim_at(src_deg); ++b) {
          int col = static_cast<int>(s) * dim_at(src_deg) + b;
          for (size_t l = 0; l < T.size(); ++l) {
            int t = T[l];
            int srow_subset = subset_index[static_cast<size_t>(i) - 1]
                                  .at(mask & ~(1ull << t));
            bool positive = l % 2 == 0;
            for (const auto& [idx, c] :
                 gm.mult[static_cast<size_t>(src_deg)][static_cast<size_t>(t)]
                        [static_cast<size_t>(b)]) {
              int row = srow_subset * tdim + idx;
              std::int64_t delta = positive ? c : fp.neg(c);
              m.at(row, col) = fp.add(m.at(row, col), delta);
            }
          }
        }
      }
      r = rank(fp, std::move(m));
    }
    rank_memo[{i, j}] = r;
    return r;
  };

  BettiTable table;
  for (int i = 0; i <= k; ++i)
    for (int shift = 0; shift <= max_shift; ++shift) {
      int j = i + shift;
      long long dim_ij = binomial(k, i) * dim_at(shift);
      if (dim_ij == 0) continue;
      long long beta =
          dim_ij - differential_rank(i, j) - differential_rank(i + 1, j);
      table.set(i, j, beta);
    }
  return table;
}

ArtinianQuotient quotient_of(const IdealPresentation& p) {
  GroebnerBasis gb = buchberger(p.ring, p.gens);
  return make_quotient(p.ring, gb);
}

}  // namespace

BettiTable koszul_betti(const IdealPresentation& p) {
  if (p.provenance != IdealPresentation::Provenance::artinian)
    throw DimensionError("Betti computation expects an Artinian presentation");
  ArtinianQuotient q = quotient_of(p);
  GradedMult gm = graded_from_quotient(q);
  return koszul_core(p.ring.fp(), gm, q.top_degree());
}

BettiTable koszul_betti_full(const IdealPresentation& p, int max_degree) {
  GroebnerBasis gb = buchberger(p.ring, p.gens);
  MonomialIdeal lead = initial_ideal(p.ring, gb);
  int k = p.ring.nvars();
  GradedMult gm;
  gm.k = k;
  // standard monomials per degree
  std::vector<std::vector<Monomial>> basis(static_cast<size_t>(max_degree) + 1);
  std::vector<std::unordered_map<Monomial, int, MonomialHash>> index(
      static_cast<size_t>(max_degree) + 1);
  std::vector<std::int32_t> exps(static_cast<size_t>(k), 0);
  auto enumerate = [&](auto&& self, int pos, int remaining, int total) -> void {
    if (pos == k) {
      if (remaining != 0) return;
      Monomial m = Monomial::from_exponents(exps);
      if (ideal_contains(lead, m)) return;
      index[static_cast<size_t>(total)][m] =
          static_cast<int>(basis[static_cast<size_t>(total)].size());
      basis[static_cast<size_t>(total)].push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, remaining - e, total);
    }
    exps[static_cast<size_t>(pos)] = 0;
  };
  for (int d = 0; d <= max_degree; ++d) enumerate(enumerate, 0, d, d);
  gm.dims.resize(static_cast<size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d)
    gm.dims[static_cast<size_t>(d)] = static_cast<int>(basis[static_cast<size_t>(d)].size());
  gm.mult.resize(static_cast<size_t>(max_degree));
  for (int d = 0; d + 1 <= max_degree; ++d) {
    auto& level = gm.mult[static_cast<size_t>(d)];
    level.resize(static_cast<size_t>(k));
    for (int v = 0; v < k; ++v) {
      level[static_cast<size_t>(v)].resize(basis[static_cast<size_t>(d)].size());
      for (size_t bidx = 0; bidx < basis[static_cast<size_t>(d)].size(); ++bidx) {
        Monomial mv = mono_mul(basis[static_cast<size_t>(d)][bidx],
                               Monomial::variable(k, v));
        Polynomial nf = normal_form(p.ring, poly_of_monomial(p.ring, mv), gb);
        for (const auto& t : nf.terms()) {
          auto it = index[static_cast<size_t>(d) + 1].find(t.mono);
          if (it == index[static_cast<size_t>(d) + 1].end())
            throw DimensionError("normal form left the graded basis");
          level[static_cast<size_t>(v)][bidx].push_back({it->second, t.coeff});
        }
      }
    }
  }
  return koszul_core(p.ring.fp(), gm, max_degree - 1);
}

long long extremal_betti_formula(int n, int i) {
  if (n < 3 || i < 1 || i > n - 1)
    throw ValidationError("extremal Betti formula out of range");
  return binomial(n, i + 1) * i - binomial(n - 1, i - 1);
}

BettiTable extremal_betti_table(int n) {
  if (n < 3) throw ValidationError("extremal table needs n >= 3");
  BettiTable t;
  t.set(0, 0, 1);
  for (int i = 1; i <= n - 2; ++i) t.set(i, i + 1, extremal_betti_formula(n, i));
  t.set(n - 1, n + 1, 1);
  return t;
}

ClosedGraph component_graph(const CliqueComponent& comp) {
  std::vector<Interval> cliques;
  for (const auto& [a, b] : comp.cliques)
    cliques.push_back({a - comp.lo + 1, b - comp.lo + 1});
  return make_closed_graph(comp.hi - comp.lo + 1, cliques);
}

BettiTable betti_of_graph(std::int64_t prime, const ClosedGraph& g) {
  return koszul_betti(artinian_reduce(build_ideal(prime, g), g));
}

bool product_formula_check(std::int64_t prime, const ClosedGraph& g) {
  BettiTable whole = betti_of_graph(prime, g);
  BettiTable prod;
  prod.set(0, 0, 1);
  if (!g.connected()) {
    for (const auto& comp : g.components)
      prod = product(prod, betti_of_graph(prime, component_graph(comp)));
  } else {
    const auto& cliques = g.components.front().cliques;
    for (size_t i = 0; i + 1 < cliques.size(); ++i)
      if (cliques[i + 1].first != cliques[i].second)
        throw ValidationError(
            "clique product formula needs a_{i+1} = b_i for all i");
    for (const auto& [a, b] : cliques) {
      ClosedGraph clique = make_closed_graph(b - a + 1, {{1, b - a + 1}});
      prod = product(prod, betti_of_graph(prime, clique));
    }
  }
  return whole == prod;
}

bool verify_betti_equality(std::int64_t prime, const ClosedGraph& g) {
  if (!g.connected())
    throw ValidationError("Betti equality check needs a connected graph");
  const auto& cliques = g.components.front().cliques;
  for (size_t i = 0; i + 1 < cliques.size(); ++i)
    if (cliques[i + 1].first != cliques[i].second)
      throw ValidationError("Betti equality check needs a_{i+1} = b_i for all i");
  BettiTable binomial_side = betti_of_graph(prime, g);
  PolyRing reduced(prime, surviving_variable_ids(g));
  BettiTable monomial_side = koszul_betti(
      monomial_presentation(prime, reduced, predicted_initial_reduced(g),
                            IdealPresentation::Provenance::artinian));
  return binomial_side == monomial_side;
}

bool gorenstein_by_betti(std::int64_t prime, const ClosedGraph& g) {
  BettiTable t = betti_of_graph(prime, g);
  int k = g.n - g.component_count();  // surviving variables = projective dimension
  int reg = regularity(g);
  return t.column_total(k) == 1 && t.at(k, k + reg) == 1;
}

bool euler_identity_holds(const BettiTable& t, const HVector& h, int k) {
  std::vector<long long> lhs;
  for (const auto& [ij, v] : t.entries) {
    auto [i, j] = ij;
    if (static_cast<size_t>(j) >= lhs.size()) lhs.resize(static_cast<size_t>(j) + 1, 0);
    lhs[static_cast<size_t>(j)] += (i % 2 == 0 ? v : -v);
  }
  std::vector<long long> rhs(h.h);
  for (int round = 0; round < k; ++round) {
    std::vector<long long> next(rhs.size() + 1, 0);
    for (size_t d = 0; d < rhs.size(); ++d) {
      next[d] += rhs[d];
      next[d + 1] -= rhs[d];
    }
    rhs = std::move(next);
  }
  while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
  while (!rhs.empty() && rhs.back() == 0) rhs.pop_back();
  return lhs == rhs;
}

}  // namespace scroll
