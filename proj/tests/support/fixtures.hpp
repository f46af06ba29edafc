#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ted/filtration.hpp"
#include "ted/graph.hpp"
#include "ted/persistence.hpp"

namespace ted::testing {

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

/// K_{1,k}: node 0 is the center.
inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return build_graph(leaves + 1, edges);
}

inline Graph two_triangles() {
  return build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

inline Graph hexagon() { return cycle(6); }

/// G(n, p) sample; deterministic for a fixed generator state.
inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

/// Random graph with minimum degree 1 (isolated nodes get a random edge).
inline Graph random_graph_no_isolated(std::mt19937& rng, int n, double p) {
  Graph g = random_graph(rng, n, p);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 0) continue;
    int other = pick(rng);
    while (other == v) other = pick(rng);
    edges.emplace_back(v, other);
  }
  return build_graph(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Coloring degree_coloring(const Graph& g) {
  std::vector<int> deg(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) deg[v] = g.degree(v);
  return densify_coloring(deg);
}

inline Coloring identity_coloring(const Graph& g) {
  std::vector<int> ids(g.node_count());
  std::iota(ids.begin(), ids.end(), 0);
  return densify_coloring(ids);
}

/// Independent recount oracle: component count and cycle rank of the
/// sublevel edge set at each distinct threshold, via fresh scans. The cycle
/// rank formula beta_1 = m - n + c is standard graph theory.
struct ThresholdCounts {
  Rat threshold{0};
  int components = 0;
  int cycle_rank = 0;
};

inline std::vector<ThresholdCounts> sublevel_recount(const Graph& g, const Coloring& c,
                                                     const EdgeFiltration& ef) {
  const int n = g.node_count();
  std::vector<std::pair<Rat, Edge>> weighted;
  for (const Edge& e : g.edges())
    weighted.emplace_back(ef.value(make_colored_edge(c[e.u], c[e.v])), e);
  std::set<Rat> thresholds;
  for (auto& [v, e] : weighted) thresholds.insert(v);

  std::vector<ThresholdCounts> out;
  for (const Rat& t : thresholds) {
    // fresh union-free scan: BFS over the sublevel edge set
    std::vector<std::vector<int>> adj(n);
    int m = 0;
    for (auto& [v, e] : weighted)
      if (v <= t) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        ++m;
      }
    std::vector<char> seen(n, 0);
    int components = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++components;
      std::vector<int> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (!seen[u]) {
            seen[u] = 1;
            stack.push_back(u);
          }
      }
    }
    out.push_back({t, components, m - n + components});
  }
  return out;
}

/// Checks a diagram against the recount oracle: ph0 deaths at each threshold
/// match the component-count drop and ph1 births match the cycle-rank jump.
inline bool diagram_matches_recount(const Graph& g, const Coloring& c,
                                    const EdgeFiltration& ef, const Diagram& d) {
  const auto counts = sublevel_recount(g, c, ef);
  int prev_components = g.node_count();
  int prev_rank = 0;
  for (const auto& tc : counts) {
    const auto deaths = static_cast<int>(
        std::count_if(d.ph0.begin(), d.ph0.end(), [&](const PersistencePoint& p) {
          return !p.essential() && *p.death == tc.threshold;
        }));
    const auto births = static_cast<int>(
        std::count_if(d.ph1.begin(), d.ph1.end(), [&](const PersistencePoint& p) {
          return p.birth == tc.threshold;
        }));
    if (deaths != prev_components - tc.components) return false;
    if (births != tc.cycle_rank - prev_rank) return false;
    prev_components = tc.components;
    prev_rank = tc.cycle_rank;
  }
  // essentials: one ph0 point per final component, all ph1 points essential
  if (static_cast<int>(d.essential_ph0()) !=
      (counts.empty() ? g.node_count() : counts.back().components))
    return false;
  for (const auto& p : d.ph1)
    if (!p.essential()) return false;
  return true;
}

}  // namespace ted::testing
