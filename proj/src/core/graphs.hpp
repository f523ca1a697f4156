#ifndef SCROLL_CORE_GRAPHS_HPP
#define SCROLL_CORE_GRAPHS_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace scroll {

using Interval = std::pair<int, int>;  // [lo, hi], 1-based, inclusive

/// One connected component: its vertex interval and its maximal cliques as
/// intervals in global coordinates, with strictly increasing endpoints and
/// consecutive overlaps.
struct CliqueComponent {
  int lo = 0;
  int hi = 0;
  std::vector<Interval> cliques;
  int clique_count() const { return static_cast<int>(cliques.size()); }
};

/// Closed graph on [n] whose components occupy consecutive vertex
/// intervals, described by the maximal-clique intervals of each component.
struct ClosedGraph {
  int n = 0;
  std::vector<CliqueComponent> components;

  int component_count() const { return static_cast<int>(components.size()); }
  bool connected() const { return components.size() == 1; }
  int clique_count() const;                 // r, summed over components
  std::vector<Interval> flat_cliques() const;
};

struct EdgeList {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // i < j, 1-based
};

/// Builds a ClosedGraph from a flat clique list, splitting into components
/// where consecutive cliques stop overlapping. Throws ValidationError on
/// any invariant violation (gaps, single-vertex cliques, bad nesting).
ClosedGraph make_closed_graph(int n, const std::vector<Interval>& cliques);

/// The closedness test in the given labeling: every edge {i,k} forces
/// {i,j} and {j,k} for all i < j < k.
bool is_closed(const EdgeList& e);

/// Maximal cliques of a closed edge list as interval chains. Throws on
/// non-closed input, isolated vertices, or components whose vertex sets
/// are not consecutive intervals.
ClosedGraph cliques_from_edges(const EdgeList& e);

EdgeList edges_from_cliques(const ClosedGraph& g);

/// All connected closed graphs on [n] in lexicographic order of the
/// flattened (a_i, b_i) sequence.
std::vector<ClosedGraph> enumerate_connected(int n);

/// All closed graphs on [n] whose components occupy consecutive intervals
/// (compositions of n into parts >= 2), same ordering.
std::vector<ClosedGraph> enumerate_all(int n);

/// Deterministic pseudo-random valid closed graph.
ClosedGraph random_closed(int n, std::uint64_t seed);

bool flat_lex_less(const ClosedGraph& a, const ClosedGraph& b);

}  // namespace scroll

#endif
