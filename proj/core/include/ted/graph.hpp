#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace ted {

/// Undirected edge with canonical endpoint order (u < v).
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);  // throws SelfLoop on a == b

/// Finite simple undirected graph. Immutable after construction; edge list
/// and adjacency lists are kept sorted so identical inputs produce identical
/// layouts.
class Graph {
 public:
  Graph() = default;

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int a, int b) const;

  /// Index of {a,b} in the sorted edge list, -1 if absent. This is the
  /// canonical edge index used for deterministic tie-breaking.
  int edge_index(int a, int b) const;

  /// Set when the input edge list contained duplicates (in either
  /// orientation); duplicates are merged rather than rejected because
  /// benchmark files store each edge twice.
  bool had_duplicate_input() const { return dedup_warning_; }

  friend Graph build_graph(int node_count,
                           std::span<const std::pair<int, int>> edge_list);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  bool dedup_warning_ = false;
};

/// Validates indices, canonicalizes endpoint order, deduplicates.
/// Throws IndexOutOfRange and SelfLoop.
Graph build_graph(int node_count, std::span<const std::pair<int, int>> edge_list);
Graph build_graph(int node_count, std::initializer_list<std::pair<int, int>> edge_list);

Graph complete_graph(int node_count);

/// Graph with node i of `g` renamed perm[i]; perm must be a permutation.
Graph permute_graph(const Graph& g, std::span<const int> perm);

/// Nodes of `b` are shifted by a.node_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Node coloring with canonical dense color ids: refinement and interning
/// assign ids by sorted key order, so ids survive node relabeling. Raw ids
/// are still never compared across independently produced colorings;
/// comparisons go through histograms.
struct Coloring {
  enum class Provenance { Initial, WLStable };

  std::vector<int> colors;
  Provenance provenance = Provenance::Initial;
  int stable_round = 0;  // meaningful for WLStable

  int size() const { return static_cast<int>(colors.size()); }
  int operator[](int v) const { return colors[v]; }

  /// Sorted (color id, class size) pairs.
  std::vector<std::pair<int, int>> histogram() const;
  /// Sorted class sizes only; invariant under any relabeling of color ids.
  std::vector<int> class_sizes() const;
};

Coloring uniform_coloring(int node_count);

/// Remaps arbitrary color values to dense ids in sorted value order.
Coloring densify_coloring(std::span<const int> raw);

/// Unordered pair of color ids, stored with lo <= hi.
struct ColoredEdge {
  int lo = 0;
  int hi = 0;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

ColoredEdge make_colored_edge(int c1, int c2);

/// One ColoredEdge per graph edge, sorted (a multiset). Throws LengthMismatch
/// when the coloring does not cover the graph.
std::vector<ColoredEdge> colored_edge_multiset(const Graph& g, const Coloring& c);

/// Line graph of g together with the edge -> node bijection and node colors
/// h({{C(u), C(v)}}). Line-graph node i corresponds to g.edges()[i].
struct LineGraphMap {
  Graph line_graph;
  std::vector<Edge> source_edges;
  std::vector<int> node_colors;
};

/// `h` maps colored-edge classes to color ids; the default interns distinct
/// classes in their canonical (sorted) order, which is injective.
LineGraphMap line_graph(const Graph& g, const Coloring& c,
                        const std::function<int(ColoredEdge)>& h = {});

}  // namespace ted
