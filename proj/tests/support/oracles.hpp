#ifndef SCROLL_TESTS_SUPPORT_ORACLES_HPP
#define SCROLL_TESTS_SUPPORT_ORACLES_HPP

// Brute-force models used as independent test oracles. Deliberately naive
// and kept apart from the library's own code paths.

#include <set>
#include <utility>
#include <vector>

namespace oracles {

using Edge = std::pair<int, int>;
using EdgeSet = std::set<Edge>;

// The interval property checked edge by edge: {i,k} forces {i,j} and
// {j,k} for every i < j < k.
inline bool closed_brute(const EdgeSet& edges) {
  auto has = [&](int a, int b) { return edges.count({a, b}) > 0; };
  for (const auto& [i, k] : edges)
    for (int j = i + 1; j < k; ++j)
      if (!has(i, j) || !has(j, k)) return false;
  return true;
}

inline int component_count_brute(int n, const EdgeSet& edges,
                                 std::vector<int>& comp_of) {
  comp_of.assign(static_cast<size_t>(n) + 1, -1);
  int comps = 0;
  for (int v = 1; v <= n; ++v) {
    if (comp_of[static_cast<size_t>(v)] != -1) continue;
    std::vector<int> stack = {v};
    comp_of[static_cast<size_t>(v)] = comps;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : edges) {
        int w = a == u ? b : (b == u ? a : -1);
        if (w != -1 && comp_of[static_cast<size_t>(w)] == -1) {
          comp_of[static_cast<size_t>(w)] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  return comps;
}

// Every labeled graph on [n] (all 2^C(n,2) edge subsets) that is closed,
// has no isolated vertex, and whose components fill consecutive vertex
// intervals. connected_only keeps single-component graphs.
inline std::vector<EdgeSet> closed_graphs_brute(int n, bool connected_only) {
  std::vector<Edge> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) slots.push_back({i, j});
  std::vector<EdgeSet> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    EdgeSet edges;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1ul << b)) edges.insert(slots[b]);
    if (!closed_brute(edges)) continue;
    std::vector<int> degree(static_cast<size_t>(n) + 1, 0);
    for (const auto& [i, j] : edges) {
      ++degree[static_cast<size_t>(i)];
      ++degree[static_cast<size_t>(j)];
    }
    bool isolated = false;
    for (int v = 1; v <= n; ++v)
      if (degree[static_cast<size_t>(v)] == 0) isolated = true;
    if (isolated) continue;
    std::vector<int> comp_of;
    int comps = component_count_brute(n, edges, comp_of);
    if (connected_only && comps != 1) continue;
    bool monotone = true;
    for (int v = 2; v <= n; ++v)
      if (comp_of[static_cast<size_t>(v)] < comp_of[static_cast<size_t>(v) - 1])
        monotone = false;
    if (!monotone) continue;
    out.push_back(std::move(edges));
  }
  return out;
}

}  // namespace oracles

#endif
