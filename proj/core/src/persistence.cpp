#include "ted/persistence.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ted/errors.hpp"
#include "ted/wl.hpp"

namespace ted {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  // Returns false when x and y were already connected.
  bool merge(int x, int y) {
    int rx = find(x);
    int ry = find(y);
    if (rx == ry) return false;
    if (size_[rx] < size_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    size_[rx] += size_[ry];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

bool operator<(const PersistencePoint& a, const PersistencePoint& b) {
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
  if (!a.death.has_value()) return false;
  return *a.death < *b.death;
}

std::size_t Diagram::essential_ph0() const {
  return static_cast<std::size_t>(
      std::count_if(ph0.begin(), ph0.end(), [](const auto& p) { return p.essential(); }));
}

std::size_t Diagram::nonessential_ph0() const { return ph0.size() - essential_ph0(); }

bool ted_equal(const Diagram& a, const Diagram& b) { return a == b; }

Diagram weighted_edge_persistence(int node_count, std::vector<WeightedEdge> edges,
                                  PersistenceStats* stats) {
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.tie_index < b.tie_index;
  });

  Diagram d;
  UnionFind uf(node_count);
  PersistenceStats local;
  for (const WeightedEdge& e : edges) {
    ++local.edges_processed;
    local.find_calls += 2;
    if (uf.merge(e.u, e.v)) {
      ++local.merges;
      d.ph0.push_back({Rat(0), e.value});
    } else {
      d.ph1.push_back({e.value, std::nullopt});
    }
  }
  const std::size_t components = static_cast<std::size_t>(node_count) - local.merges;
  for (std::size_t i = 0; i < components; ++i) d.ph0.push_back({Rat(0), std::nullopt});

  std::sort(d.ph0.begin(), d.ph0.end());
  std::sort(d.ph1.begin(), d.ph1.end());
  if (stats) *stats = local;
  return d;
}

Diagram vr_persistence(const FiltrationMatrix& m, PersistenceStats* stats) {
  const int n = m.size();
  std::vector<WeightedEdge> edges;
  long long edge_index = 0;
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) != std::optional<Rat>(Rat(0)))
      throw MalformedMatrix("nonzero diagonal at " + std::to_string(i));
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j) != m.at(j, i))
        throw MalformedMatrix("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (m.finite(i, j)) {
        const Rat& v = *m.at(i, j);
        if (v <= Rat(0))
          throw MalformedMatrix("non-positive entry at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
        edges.push_back({v, i, j, edge_index});
      }
      ++edge_index;  // canonical index counts all i<j slots
    }
  }
  return weighted_edge_persistence(n, std::move(edges), stats);
}

Diagram ted_diagram(const Graph& g, const Coloring& c, const EdgeFiltration& ef) {
  return vr_persistence(filtration_matrix(g, c, ef));
}

Diagram lgvr_diagram(const Graph& g, const Coloring& c0) {
  const Coloring stable = wl_refine(g, c0).stable();
  const auto universe = colored_edge_universe(g, stable);
  const EdgeFiltration ef = phi_filtration(universe, default_color_features(universe));
  return ted_diagram(g, stable, ef);
}

namespace {

nlohmann::json point_to_json(const PersistencePoint& p) {
  nlohmann::json death = p.essential() ? nlohmann::json("inf") : nlohmann::json(to_string(*p.death));
  return nlohmann::json::array({to_string(p.birth), death});
}

PersistencePoint point_from_json(const nlohmann::json& j) {
  PersistencePoint p;
  p.birth = parse_rational(j.at(0).get<std::string>());
  const auto& death = j.at(1);
  if (!(death.is_string() && death.get<std::string>() == "inf"))
    p.death = parse_rational(death.get<std::string>());
  return p;
}

}  // namespace

nlohmann::json diagram_to_json(const Diagram& d) {
  nlohmann::json ph0 = nlohmann::json::array();
  nlohmann::json ph1 = nlohmann::json::array();
  for (const auto& p : d.ph0) ph0.push_back(point_to_json(p));
  for (const auto& p : d.ph1) ph1.push_back(point_to_json(p));
  return {{"ph0", std::move(ph0)}, {"ph1", std::move(ph1)}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
  Diagram d;
  for (const auto& p : j.at("ph0")) d.ph0.push_back(point_from_json(p));
  for (const auto& p : j.at("ph1")) d.ph1.push_back(point_from_json(p));
  std::sort(d.ph0.begin(), d.ph0.end());
  std::sort(d.ph1.begin(), d.ph1.end());
  return d;
}

}  // namespace ted
