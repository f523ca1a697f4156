#include "core/graphs.hpp"

#include <algorithm>
#include <random>

#include "core/errors.hpp"

namespace scroll {

int ClosedGraph::clique_count() const {
  int r = 0;
  for (const auto& c : components) r += c.clique_count();
  return r;
}

std::vector<Interval> ClosedGraph::flat_cliques() const {
  std::vector<Interval> flat;
  for (const auto& c : components)
    flat.insert(flat.end(), c.cliques.begin(), c.cliques.end());
  return flat;
}

ClosedGraph make_closed_graph(int n, const std::vector<Interval>& cliques) {
  if (n < 2) throw ValidationError("need at least 2 vertices");
  if (cliques.empty()) throw ValidationError("clique list is empty");
  for (const auto& [a, b] : cliques) {
    if (a < 1 || b > n) throw ValidationError("clique out of vertex range");
    if (a >= b) throw ValidationError("single-vertex cliques are not allowed");
  }
  for (size_t i = 0; i + 1 < cliques.size(); ++i) {
    if (cliques[i].first >= cliques[i + 1].first ||
        cliques[i].second >= cliques[i + 1].second)
      throw ValidationError("clique endpoints must be strictly increasing");
    if (cliques[i + 1].first > cliques[i].second + 1)
      throw ValidationError("vertex gap between cliques leaves isolated vertices");
  }
  if (cliques.front().first != 1 || cliques.back().second != n)
    throw ValidationError("cliques must cover vertices 1 and n");

  ClosedGraph g;
  g.n = n;
  CliqueComponent comp;
  comp.lo = 1;
  for (size_t i = 0; i < cliques.size(); ++i) {
    if (!comp.cliques.empty() && cliques[i].first == comp.cliques.back().second + 1) {
      comp.hi = comp.cliques.back().second;
      g.components.push_back(std::move(comp));
      comp = CliqueComponent{};
      comp.lo = cliques[i].first;
    }
    comp.cliques.push_back(cliques[i]);
  }
  comp.hi = comp.cliques.back().second;
  g.components.push_back(std::move(comp));
  return g;
}

bool is_closed(const EdgeList& e) {
  auto has = [&](int i, int j) {
    return e.edges.count({std::min(i, j), std::max(i, j)}) > 0;
  };
  for (const auto& [i, k] : e.edges)
    for (int j = i + 1; j < k; ++j)
      if (!has(i, j) || !has(j, k)) return false;
  return true;
}

ClosedGraph cliques_from_edges(const EdgeList& e) {
  if (e.n < 2) throw ValidationError("need at least 2 vertices");
  for (const auto& [i, j] : e.edges)
    if (i < 1 || j > e.n || i >= j) throw ValidationError("edge out of range");
  if (!is_closed(e)) throw ValidationError("edge list is not closed in this labeling");

  // connected components via union of edges
  std::vector<int> comp_of(static_cast<size_t>(e.n) + 1, -1);
  int comp_count = 0;
  for (int v = 1; v <= e.n; ++v) {
    if (comp_of[static_cast<size_t>(v)] != -1) continue;
    std::vector<int> stack = {v};
    comp_of[static_cast<size_t>(v)] = comp_count;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : e.edges) {
        int w = -1;
        if (a == u) w = b;
        if (b == u) w = a;
        if (w != -1 && comp_of[static_cast<size_t>(w)] == -1) {
          comp_of[static_cast<size_t>(w)] = comp_count;
          stack.push_back(w);
        }
      }
    }
    ++comp_count;
  }
  std::vector<int> degree(static_cast<size_t>(e.n) + 1, 0);
  for (const auto& [i, j] : e.edges) {
    ++degree[static_cast<size_t>(i)];
    ++degree[static_cast<size_t>(j)];
  }
  for (int v = 1; v <= e.n; ++v)
    if (degree[static_cast<size_t>(v)] == 0)
      throw ValidationError("isolated vertex " + std::to_string(v));
  for (int v = 2; v <= e.n; ++v)
    if (comp_of[static_cast<size_t>(v)] < comp_of[static_cast<size_t>(v) - 1])
      throw ValidationError("components are interleaved in this labeling");

  // per component: candidate cliques [v, m_v], kept when m strictly grows
  std::vector<Interval> flat;
  for (int c = 0; c < comp_count; ++c) {
    int lo = 0, hi = 0;
    for (int v = 1; v <= e.n; ++v)
      if (comp_of[static_cast<size_t>(v)] == c) {
        if (lo == 0) lo = v;
        hi = v;
      }
    int best = 0;
    for (int v = lo; v < hi; ++v) {
      int m = 0;
      for (const auto& [i, j] : e.edges)
        if (i == v) m = std::max(m, j);
      if (m == 0)
        throw ValidationError("vertex " + std::to_string(v) +
                              " has no neighbor to its right");
      if (m > best) {
        flat.push_back({v, m});
        best = m;
      }
    }
  }
  return make_closed_graph(e.n, flat);
}

EdgeList edges_from_cliques(const ClosedGraph& g) {
  EdgeList e;
  e.n = g.n;
  for (const auto& [a, b] : g.flat_cliques())
    for (int i = a; i < b; ++i)
      for (int j = i + 1; j <= b; ++j) e.edges.insert({i, j});
  return e;
}

namespace {

void extend_chain(int n, std::vector<Interval>& acc,
                  std::vector<ClosedGraph>& out) {
  const auto [a, b] = acc.back();
  if (b == n) {
    out.push_back(make_closed_graph(n, acc));
    return;
  }
  for (int a2 = a + 1; a2 <= b; ++a2)
    for (int b2 = b + 1; b2 <= n; ++b2) {
      acc.push_back({a2, b2});
      extend_chain(n, acc, out);
      acc.pop_back();
    }
}

}  // namespace

std::vector<ClosedGraph> enumerate_connected(int n) {
  if (n < 2) throw ValidationError("enumeration needs n >= 2");
  std::vector<ClosedGraph> out;
  std::vector<Interval> acc;
  for (int b1 = 2; b1 <= n; ++b1) {
    acc.assign(1, {1, b1});
    extend_chain(n, acc, out);
  }
  return out;
}

bool flat_lex_less(const ClosedGraph& a, const ClosedGraph& b) {
  std::vector<int> ka, kb;
  for (const auto& [x, y] : a.flat_cliques()) {
    ka.push_back(x);
    ka.push_back(y);
  }
  for (const auto& [x, y] : b.flat_cliques()) {
    kb.push_back(x);
    kb.push_back(y);
  }
  return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
}

std::vector<ClosedGraph> enumerate_all(int n) {
  if (n < 2) throw ValidationError("enumeration needs n >= 2");
  std::vector<ClosedGraph> out;
  std::vector<int> parts;

  auto emit_composition = [&]() {
    // per part, every connected chain shifted into the part's interval
    std::vector<std::vector<std::vector<Interval>>> choices;
    int base = 0;
    for (int part : parts) {
      std::vector<std::vector<Interval>> shifted;
      for (const auto& g : enumerate_connected(part)) {
        std::vector<Interval> cl;
        for (auto [a, b] : g.flat_cliques()) cl.push_back({a + base, b + base});
        shifted.push_back(std::move(cl));
      }
      choices.push_back(std::move(shifted));
      base += part;
    }
    std::vector<size_t> idx(parts.size(), 0);
    while (true) {
      std::vector<Interval> flat;
      for (size_t k = 0; k < idx.size(); ++k)
        flat.insert(flat.end(), choices[k][idx[k]].begin(), choices[k][idx[k]].end());
      out.push_back(make_closed_graph(n, flat));
      size_t k = idx.size();
      while (k > 0 && ++idx[k - 1] == choices[k - 1].size()) idx[--k] = 0;
      if (k == 0) break;
    }
  };

  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      emit_composition();
      return;
    }
    for (int part = 2; part <= remaining; ++part) {
      if (remaining - part == 1) continue;  // would leave an isolated vertex
      parts.push_back(part);
      self(self, remaining - part);
      parts.pop_back();
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), flat_lex_less);
  return out;
}

ClosedGraph random_closed(int n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("need n >= 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  std::vector<int> parts;
  int remaining = n;
  while (remaining > 0) {
    int part;
    do {
      part = uniform(2, remaining);
    } while (remaining - part == 1);
    parts.push_back(part);
    remaining -= part;
  }
  std::vector<Interval> flat;
  int base = 0;
  for (int part : parts) {
    int lo = base + 1, hi = base + part;
    int a = lo, b = uniform(a + 1, hi);
    flat.push_back({a, b});
    while (b < hi) {
      int a2 = uniform(a + 1, b);
      int b2 = uniform(b + 1, hi);
      flat.push_back({a2, b2});
      a = a2;
      b = b2;
    }
    base += part;
  }
  return make_closed_graph(n, flat);
}

}  // namespace scroll
