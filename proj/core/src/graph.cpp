#include "ted/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ted/errors.hpp"

namespace ted {

Edge make_edge(int a, int b) {
  if (a == b) throw SelfLoop("self-loop at node " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

bool Graph::has_edge(int a, int b) const {
  if (a == b) return false;
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::edge_index(int a, int b) const {
  if (a == b) return -1;
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph build_graph(int node_count, std::span<const std::pair<int, int>> edge_list) {
  if (node_count < 0) throw IndexOutOfRange("negative node count");
  Graph g;
  g.n_ = node_count;
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count)
      throw IndexOutOfRange("edge endpoint " + std::to_string(a < 0 || a >= node_count ? a : b) +
                            " out of range [0, " + std::to_string(node_count) + ")");
    g.edges_.push_back(make_edge(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto last = std::unique(g.edges_.begin(), g.edges_.end());
  g.dedup_warning_ = last != g.edges_.end();
  g.edges_.erase(last, g.edges_.end());

  g.adj_.assign(node_count, {});
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph build_graph(int node_count, std::initializer_list<std::pair<int, int>> edge_list) {
  return build_graph(node_count, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

Graph complete_graph(int node_count) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(node_count) * (node_count - 1) / 2);
  for (int i = 0; i < node_count; ++i)
    for (int j = i + 1; j < node_count; ++j) edges.emplace_back(i, j);
  return build_graph(node_count, edges);
}

Graph permute_graph(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.node_count())
    throw LengthMismatch("permutation length != node count");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return build_graph(g.node_count(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(a.edges().size() + b.edges().size());
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  const int off = a.node_count();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + off, e.v + off);
  return build_graph(a.node_count() + b.node_count(), edges);
}

std::vector<std::pair<int, int>> Coloring::histogram() const {
  std::map<int, int> counts;
  for (int c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> sizes;
  for (auto& [c, k] : histogram()) sizes.push_back(k);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Coloring uniform_coloring(int node_count) {
  Coloring c;
  c.colors.assign(node_count, 0);
  return c;
}

Coloring densify_coloring(std::span<const int> raw) {
  std::map<int, int> intern;
  for (int value : raw) intern.emplace(value, 0);
  int next = 0;
  for (auto& [value, id] : intern) id = next++;
  Coloring c;
  c.colors.reserve(raw.size());
  for (int value : raw) c.colors.push_back(intern.at(value));
  return c;
}

ColoredEdge make_colored_edge(int c1, int c2) {
  return c1 <= c2 ? ColoredEdge{c1, c2} : ColoredEdge{c2, c1};
}

std::vector<ColoredEdge> colored_edge_multiset(const Graph& g, const Coloring& c) {
  if (c.size() != g.node_count())
    throw LengthMismatch("coloring length " + std::to_string(c.size()) +
                         " != node count " + std::to_string(g.node_count()));
  std::vector<ColoredEdge> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.push_back(make_colored_edge(c[e.u], c[e.v]));
  std::sort(out.begin(), out.end());
  return out;
}

LineGraphMap line_graph(const Graph& g, const Coloring& c,
                        const std::function<int(ColoredEdge)>& h) {
  if (c.size() != g.node_count()) throw LengthMismatch("coloring length != node count");

  std::function<int(ColoredEdge)> hash = h;
  std::map<ColoredEdge, int> intern;
  if (!hash) {
    // Canonical interning: distinct classes get distinct ids in sorted order.
    for (ColoredEdge ce : colored_edge_multiset(g, c)) intern.emplace(ce, 0);
    int next = 0;
    for (auto& [ce, id] : intern) id = next++;
    hash = [&intern](ColoredEdge ce) { return intern.at(ce); };
  }

  const int m = g.edge_count();
  LineGraphMap out;
  out.source_edges = g.edges();
  out.node_colors.reserve(m);
  for (const Edge& e : g.edges())
    out.node_colors.push_back(hash(make_colored_edge(c[e.u], c[e.v])));

  // Two line-graph nodes are adjacent iff their source edges share exactly
  // one endpoint, so enumerating incident pairs per node emits each line edge
  // once.
  std::vector<std::pair<int, int>> line_edges;
  std::vector<std::vector<int>> incident(g.node_count());
  for (int i = 0; i < m; ++i) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  for (const auto& ids : incident)
    for (std::size_t a = 0; a < ids.size(); ++a)
      for (std::size_t b = a + 1; b < ids.size(); ++b)
        line_edges.emplace_back(ids[a], ids[b]);

  out.line_graph = build_graph(m, line_edges);
  return out;
}

}  // namespace ted
