#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ted/filtration.hpp"
#include "ted/graph.hpp"
#include "ted/rational.hpp"

namespace ted {

/// A (birth, death) pair; death == nullopt means the class never dies.
/// Dimension-0 points are born at 0; birth < death always holds because
/// filtration values are strictly positive.
struct PersistencePoint {
  Rat birth{0};
  std::optional<Rat> death;

  bool essential() const { return !death.has_value(); }

  friend bool operator==(const PersistencePoint&, const PersistencePoint&) = default;
};

/// Canonical order: by birth, then finite deaths ascending, essentials last.
bool operator<(const PersistencePoint& a, const PersistencePoint& b);

/// Tuple of persistence-diagram multisets for dimensions 0 and 1, stored
/// sorted so multiset comparison is plain vector equality. Every dimension-1
/// point of a 1-skeleton filtration is essential: no 2-simplex ever enters
/// the complex to kill a cycle.
struct Diagram {
  std::vector<PersistencePoint> ph0;
  std::vector<PersistencePoint> ph1;

  std::size_t essential_ph0() const;
  std::size_t nonessential_ph0() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

bool ted_equal(const Diagram& a, const Diagram& b);

/// Work counters for the sweep; the union-find phase performs exactly one
/// merge-or-cycle decision per finite edge.
struct PersistenceStats {
  std::size_t edges_processed = 0;
  std::size_t find_calls = 0;
  std::size_t merges = 0;
};

/// Dimension 0/1 persistence of the 1-skeleton Vietoris-Rips filtration of a
/// distance matrix: finite entries sorted ascending (ties by canonical edge
/// index), then a union-find sweep emits (0, value) when an edge joins two
/// components and (value, inf) when it closes a cycle; surviving components
/// emit (0, inf). Throws MalformedMatrix on asymmetry, non-positive
/// off-diagonal entries, or a nonzero diagonal.
Diagram vr_persistence(const FiltrationMatrix& m, PersistenceStats* stats = nullptr);

/// Sparse entry point used by vr_persistence and by corpus-scale runs;
/// processing order is (value, tie_index) ascending.
struct WeightedEdge {
  Rat value;
  int u = 0;
  int v = 0;
  long long tie_index = 0;
};

Diagram weighted_edge_persistence(int node_count, std::vector<WeightedEdge> edges,
                                  PersistenceStats* stats = nullptr);

/// Diagram of (G, C) under the injective filtration ef.
Diagram ted_diagram(const Graph& g, const Coloring& c, const EdgeFiltration& ef);

/// Full deterministic pipeline: refine c0 to the stable coloring, build the
/// pairing-map filtration over the graph's colored-edge universe, then take
/// the diagram. All finite coordinates land in (0, 1/2].
Diagram lgvr_diagram(const Graph& g, const Coloring& c0);

nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

}  // namespace ted
