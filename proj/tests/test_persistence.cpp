#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "support/fixtures.hpp"
#include "ted/errors.hpp"
#include "ted/harness.hpp"
#include "ted/persistence.hpp"
#include "ted/wl.hpp"

using namespace ted;
using namespace ted::testing;

namespace {

EdgeFiltration single_class_half() {
  return EdgeFiltration::from_table({{make_colored_edge(0, 0), Rat(1, 2)}});
}

int count_points(const std::vector<PersistencePoint>& points, const Rat& birth,
                 const std::optional<Rat>& death) {
  return static_cast<int>(std::count(points.begin(), points.end(),
                                     PersistencePoint{birth, death}));
}

}  // namespace

TEST_CASE("C6 with all edges at 1/2: five merges, one essential, one cycle") {
  auto d = vr_persistence(filtration_matrix(hexagon(), uniform_coloring(6), single_class_half()));
  CHECK(d.ph0.size() == 6);
  CHECK(count_points(d.ph0, Rat(0), Rat(1, 2)) == 5);
  CHECK(count_points(d.ph0, Rat(0), std::nullopt) == 1);
  REQUIRE(d.ph1.size() == 1);
  CHECK(d.ph1[0] == PersistencePoint{Rat(1, 2), std::nullopt});
}

TEST_CASE("2xC3 with all edges at 1/2: four merges, two essentials, two cycles") {
  auto d = vr_persistence(
      filtration_matrix(two_triangles(), uniform_coloring(6), single_class_half()));
  CHECK(d.ph0.size() == 6);
  CHECK(count_points(d.ph0, Rat(0), Rat(1, 2)) == 4);
  CHECK(count_points(d.ph0, Rat(0), std::nullopt) == 2);
  CHECK(d.ph1.size() == 2);
}

TEST_CASE("edgeless graph: every node is an essential component") {
  auto d = vr_persistence(FiltrationMatrix(5));
  CHECK(d.ph0.size() == 5);
  CHECK(d.essential_ph0() == 5);
  CHECK(d.ph1.empty());
}

TEST_CASE("malformed matrices are rejected") {
  FiltrationMatrix asym(2);
  asym.set_raw(0, 1, Rat(1, 4));
  CHECK_THROWS_AS(vr_persistence(asym), MalformedMatrix);

  FiltrationMatrix diag(2);
  diag.set_raw(1, 1, Rat(1, 8));
  CHECK_THROWS_AS(vr_persistence(diag), MalformedMatrix);

  FiltrationMatrix nonpos(2);
  nonpos.set(0, 1, Rat(-1, 4));
  CHECK_THROWS_AS(vr_persistence(nonpos), MalformedMatrix);
}

TEST_CASE("ted diagram of a triangle under a uniform coloring") {
  Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto ef = single_class_half();
  auto d = ted_diagram(triangle, uniform_coloring(3), ef);
  const Rat t = ef.value(make_colored_edge(0, 0));
  CHECK(count_points(d.ph0, Rat(0), t) == 2);
  CHECK(count_points(d.ph0, Rat(0), std::nullopt) == 1);
  REQUIRE(d.ph1.size() == 1);
  CHECK(d.ph1[0].birth == t);
}

TEST_CASE("ted diagram of P3 with colors (a,b,a): a tree has no cycles") {
  Graph p3 = path(3);
  Coloring aba = densify_coloring(std::vector<int>{0, 1, 0});
  auto ef = EdgeFiltration::from_table({{make_colored_edge(0, 1), Rat(1, 3)}});
  auto d = ted_diagram(p3, aba, ef);
  CHECK(count_points(d.ph0, Rat(0), Rat(1, 3)) == 2);
  CHECK(count_points(d.ph0, Rat(0), std::nullopt) == 1);
  CHECK(d.ph1.empty());
}

TEST_CASE("diagrams are permutation invariant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 8, 0.35);
    auto d = lgvr_diagram(g, uniform_coloring(8));
    auto perm = random_permutation(rng, 8);
    auto dp = lgvr_diagram(permute_graph(g, perm), uniform_coloring(8));
    CHECK(ted_equal(d, dp));
  }
}

TEST_CASE("lgvr_diagram separates C6 from 2xC3 while WL cannot") {
  CHECK_FALSE(wl_distinguish(hexagon(), two_triangles()));
  auto dg = lgvr_diagram(hexagon(), uniform_coloring(6));
  auto dh = lgvr_diagram(two_triangles(), uniform_coloring(6));
  CHECK(dg.nonessential_ph0() == 5);
  CHECK(dh.nonessential_ph0() == 4);
  CHECK(dg.ph1.size() == 1);
  CHECK(dh.ph1.size() == 2);
  CHECK_FALSE(ted_equal(dg, dh));
}

TEST_CASE("lgvr_diagram of K1,3: a tree with one essential component") {
  auto d = lgvr_diagram(star(3), uniform_coloring(4));
  CHECK(d.ph0.size() == 4);
  CHECK(d.essential_ph0() == 1);
  CHECK(d.ph1.empty());
}

TEST_CASE("ted_equal compares multisets exactly") {
  auto a = lgvr_diagram(hexagon(), uniform_coloring(6));
  CHECK(ted_equal(a, a));
  auto b = lgvr_diagram(two_triangles(), uniform_coloring(6));
  CHECK_FALSE(ted_equal(a, b));  // same ph0 sizes, ph1 counts 1 vs 2
}

TEST_CASE("every diagram coordinate of the pipeline lies in (0, 1/2] or infinity") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 9, 0.3);
    auto d = lgvr_diagram(g, uniform_coloring(9));
    for (const auto& p : d.ph0) {
      CHECK(p.birth == Rat(0));
      if (!p.essential()) {
        CHECK(*p.death > Rat(0));
        CHECK(*p.death <= Rat(1, 2));
      }
    }
    for (const auto& p : d.ph1) {
      CHECK(p.essential());
      CHECK(p.birth > Rat(0));
      CHECK(p.birth <= Rat(1, 2));
    }
  }
}

TEST_CASE("union-find diagram matches the fresh recount at every threshold") {
  auto check_graph = [](const Graph& g) {
    const std::vector<Coloring> colorings = {
        wl_refine(g, uniform_coloring(g.node_count())).stable(),
        degree_coloring(g),
        identity_coloring(g),
    };
    for (const Coloring& c : colorings) {
      auto universe = colored_edge_universe(g, c);
      if (universe.empty()) {
        auto d = lgvr_diagram(g, uniform_coloring(g.node_count()));
        CHECK(d.ph0.size() == static_cast<std::size_t>(g.node_count()));
        continue;
      }
      auto ef = canonical_rank_filtration(universe);
      auto d = ted_diagram(g, c, ef);
      CHECK(diagram_matches_recount(g, c, ef, d));
    }
  };

  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : nonisomorphic_graphs(n)) check_graph(g);

  std::mt19937 rng(41);
  std::uniform_int_distribution<int> size(7, 8);
  for (int trial = 0; trial < 200; ++trial) check_graph(random_graph(rng, size(rng), 0.4));
}

TEST_CASE("tie order does not change the diagram multiset") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 8, 0.5);
    auto stable = wl_refine(g, uniform_coloring(8)).stable();
    auto universe = colored_edge_universe(g, stable);
    if (universe.empty()) continue;
    auto ef = canonical_rank_filtration(universe);

    std::vector<WeightedEdge> edges;
    for (const Edge& e : g.edges())
      edges.push_back({ef.value(make_colored_edge(stable[e.u], stable[e.v])), e.u, e.v,
                       static_cast<long long>(edges.size())});
    auto reference = weighted_edge_persistence(8, edges);

    for (int shuffle = 0; shuffle < 100; ++shuffle) {
      auto shuffled = edges;
      std::vector<long long> ticket(shuffled.size());
      std::iota(ticket.begin(), ticket.end(), 0);
      std::shuffle(ticket.begin(), ticket.end(), rng);
      for (std::size_t i = 0; i < shuffled.size(); ++i) shuffled[i].tie_index = ticket[i];
      CHECK(weighted_edge_persistence(8, shuffled) == reference);
    }
  }
}

TEST_CASE("Euler bookkeeping: every edge contributes exactly one point") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 9, 0.4);
    auto d = lgvr_diagram(g, uniform_coloring(9));
    CHECK(d.nonessential_ph0() + d.ph1.size() == static_cast<std::size_t>(g.edge_count()));
    CHECK(d.ph0.size() == static_cast<std::size_t>(g.node_count()));
  }
}

TEST_CASE("union-find phase performs one operation per edge") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, 10, 0.5);
    auto stable = wl_refine(g, uniform_coloring(10)).stable();
    auto universe = colored_edge_universe(g, stable);
    if (universe.empty()) continue;
    PersistenceStats stats;
    vr_persistence(filtration_matrix(g, stable, canonical_rank_filtration(universe)), &stats);
    CHECK(stats.edges_processed == static_cast<std::size_t>(g.edge_count()));
    CHECK(stats.merges <= static_cast<std::size_t>(g.node_count()));
  }
}

TEST_CASE("diagram JSON round trip") {
  auto d = lgvr_diagram(two_triangles(), uniform_coloring(6));
  CHECK(diagram_from_json(diagram_to_json(d)) == d);

  Diagram empty;
  CHECK(diagram_from_json(diagram_to_json(empty)) == empty);
}
