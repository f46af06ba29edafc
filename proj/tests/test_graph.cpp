#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "ted/errors.hpp"
#include "ted/graph.hpp"
#include "ted/harness.hpp"

using namespace ted;
using namespace ted::testing;

TEST_CASE("build_graph canonicalizes and validates") {
  Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.node_count() == 3);
  CHECK(triangle.edge_count() == 3);

  Graph isolated = build_graph(1, {});
  CHECK(isolated.node_count() == 1);
  CHECK(isolated.edge_count() == 0);

  Graph c6 = hexagon();
  CHECK(c6.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), IndexOutOfRange);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), SelfLoop);

  // duplicates (either orientation) merge and raise the warning flag
  Graph dup = build_graph(2, {{0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.had_duplicate_input());
  CHECK_FALSE(build_graph(2, {{0, 1}}).had_duplicate_input());
}

TEST_CASE("colored_edge_multiset") {
  Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto uniform = uniform_coloring(3);
  auto ms = colored_edge_multiset(triangle, uniform);
  REQUIRE(ms.size() == 3);
  for (auto ce : ms) CHECK(ce == make_colored_edge(0, 0));

  Graph p3 = path(3);
  Coloring aba = densify_coloring(std::vector<int>{0, 1, 0});
  auto ms2 = colored_edge_multiset(p3, aba);
  REQUIRE(ms2.size() == 2);
  CHECK(ms2[0] == make_colored_edge(0, 1));
  CHECK(ms2[1] == make_colored_edge(0, 1));

  CHECK_THROWS_AS(colored_edge_multiset(p3, uniform_coloring(2)), LengthMismatch);
}

TEST_CASE("colored edge classes are order-invariant") {
  CHECK(make_colored_edge(3, 1) == make_colored_edge(1, 3));
  CHECK(make_colored_edge(2, 2) == make_colored_edge(2, 2));
}

TEST_CASE("line graph of small fixtures") {
  auto check_line = [](const Graph& g, int nodes, int edges) {
    auto lg = line_graph(g, uniform_coloring(g.node_count()));
    CHECK(lg.line_graph.node_count() == nodes);
    CHECK(lg.line_graph.edge_count() == edges);
    CHECK(static_cast<int>(lg.source_edges.size()) == g.edge_count());
  };
  check_line(build_graph(3, {{0, 1}, {1, 2}, {2, 0}}), 3, 3);  // L(C3) = C3
  check_line(star(3), 3, 3);                                   // L(K1,3) = C3
  check_line(path(3), 2, 1);

  // empty edge set yields an empty line graph
  auto lg = line_graph(build_graph(4, {}), uniform_coloring(4));
  CHECK(lg.line_graph.node_count() == 0);
}

TEST_CASE("line graph node colors use the class hash") {
  Graph p3 = path(3);
  Coloring aba = densify_coloring(std::vector<int>{0, 1, 0});
  auto lg = line_graph(p3, aba);
  REQUIRE(lg.node_colors.size() == 2);
  CHECK(lg.node_colors[0] == lg.node_colors[1]);  // both edges in class {{a,b}}

  Graph p4 = path(4);
  Coloring abab = densify_coloring(std::vector<int>{0, 1, 0, 1});
  auto lg2 = line_graph(p4, abab);
  // classes {{a,b}} x3 under default interning
  CHECK(lg2.node_colors == std::vector<int>{0, 0, 0});
}

TEST_CASE("complete_graph") {
  CHECK(complete_graph(0).node_count() == 0);
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
}

TEST_CASE("line graph degree law: deg(l_uv) = deg(u) + deg(v) - 2") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 8, 0.4);
    auto lg = line_graph(g, uniform_coloring(8));
    for (int i = 0; i < lg.line_graph.node_count(); ++i) {
      const Edge e = lg.source_edges[i];
      CHECK(lg.line_graph.degree(i) == g.degree(e.u) + g.degree(e.v) - 2);
    }
  }
}

TEST_CASE("line graph edge count matches the degree formula on all graphs up to 6 nodes") {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      long long expected = 0;
      for (int v = 0; v < n; ++v)
        expected += static_cast<long long>(g.degree(v)) * (g.degree(v) - 1) / 2;
      auto lg = line_graph(g, uniform_coloring(n));
      CHECK(lg.line_graph.edge_count() == expected);
    }
  }
}

TEST_CASE("colored_edge_multiset is isomorphism invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 9, 0.35);
    std::vector<int> colors(9);
    std::uniform_int_distribution<int> pick(0, 3);
    for (auto& c : colors) c = pick(rng);
    Coloring coloring = densify_coloring(colors);

    auto perm = random_permutation(rng, 9);
    Graph pg = permute_graph(g, perm);
    std::vector<int> pcolors(9);
    for (int v = 0; v < 9; ++v) pcolors[perm[v]] = coloring[v];
    Coloring pcoloring;
    pcoloring.colors = pcolors;

    CHECK(colored_edge_multiset(g, coloring) == colored_edge_multiset(pg, pcoloring));
  }
}
