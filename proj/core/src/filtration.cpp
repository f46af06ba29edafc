#include "ted/filtration.hpp"

#include <algorithm>
#include <string>

#include <nlohmann/json.hpp>

#include "detail/epsilon_scan.hpp"
#include "ted/errors.hpp"

namespace ted {

namespace {

const Rat kHalf{1, 2};

void check_bounds(const Rat& v) {
  if (v <= Rat(0) || v > kHalf)
    throw InvalidFiltrationValue("filtration value " + to_string(v) + " outside (0, 1/2]");
}

using detail::scan_epsilon;

}  // namespace

EdgeFiltration EdgeFiltration::from_table(std::map<ColoredEdge, Rat> table,
                                          Construction construction) {
  std::set<Rat> seen;
  for (const auto& [ce, v] : table) {
    check_bounds(v);
    if (!seen.insert(v).second)
      throw NonInjectiveFeatures("duplicate filtration value " + to_string(v));
  }
  EdgeFiltration ef;
  ef.table_ = std::move(table);
  ef.construction_ = construction;
  return ef;
}

const Rat& EdgeFiltration::value(ColoredEdge ce) const {
  auto it = table_.find(ce);
  if (it == table_.end())
    throw MissingFiltrationValue("no filtration value for colored edge {" +
                                 std::to_string(ce.lo) + "," + std::to_string(ce.hi) + "}");
  return it->second;
}

bool EdgeFiltration::injective_scan() const {
  std::set<Rat> seen;
  for (const auto& [ce, v] : table_)
    if (!seen.insert(v).second) return false;
  return true;
}

nlohmann::json EdgeFiltration::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [ce, v] : table_)
    out.push_back({{"colored_edge", {ce.lo, ce.hi}}, {"value", to_string(v)}});
  return out;
}

EdgeFiltration EdgeFiltration::from_json(const nlohmann::json& j) {
  std::map<ColoredEdge, Rat> table;
  for (const auto& entry : j) {
    const auto& ce = entry.at("colored_edge");
    table.emplace(make_colored_edge(ce.at(0).get<int>(), ce.at(1).get<int>()),
                  parse_rational(entry.at("value").get<std::string>()));
  }
  return from_table(std::move(table));
}

EdgeFiltration canonical_rank_filtration(const std::set<ColoredEdge>& universe) {
  if (universe.empty()) throw EmptyUniverse("canonical_rank_filtration on empty universe");
  std::map<ColoredEdge, Rat> table;
  const long long total = static_cast<long long>(universe.size());
  long long rank = 1;
  for (ColoredEdge ce : universe) table.emplace(ce, Rat(rank++, 2 * total));
  return EdgeFiltration::from_table(std::move(table), EdgeFiltration::Construction::CanonicalRank);
}

PhiVector phi_map(const RatVec& x, const RatVec& y, const ColorEncoder& f, const Rat& eps) {
  if (x.size() != y.size()) throw DimensionMismatch("pair features of unequal dimension");
  const Rat fx = f(x);
  const Rat fy = f(y);
  RatVec xs(x.size());
  RatVec ys(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    xs[i] = x[i] + eps * fx;
    ys[i] = y[i] + eps * fy;
  }
  return PhiVector{vec_add(xs, ys), vec_abs(vec_sub(xs, ys))};
}

std::map<int, RatVec> default_color_features(const std::set<ColoredEdge>& universe) {
  std::map<int, RatVec> features;
  for (ColoredEdge ce : universe) {
    features.emplace(ce.lo, RatVec{Rat(ce.lo + 1)});
    features.emplace(ce.hi, RatVec{Rat(ce.hi + 1)});
  }
  return features;
}

namespace {

struct FeatureTable {
  std::vector<RatVec> vectors;
  std::vector<Rat> encoded;  // injective scalar per vector
  std::size_t dim = 0;
};

FeatureTable load_features(const std::map<int, RatVec>& color_features) {
  FeatureTable t;
  std::map<RatVec, int> reverse;
  for (const auto& [color, vec] : color_features) {
    if (!t.vectors.empty() && vec.size() != t.dim)
      throw DimensionMismatch("feature vectors of unequal dimension");
    t.dim = vec.size();
    if (!reverse.emplace(vec, color).second)
      throw NonInjectiveFeatures("two colors share feature vector");
    t.vectors.push_back(vec);
    t.encoded.push_back(Rat(color + 1));
  }
  return t;
}

/// Obstruction values for the separation condition. A pairing-map collision
/// forces, in some component d and for some sign pattern over four features,
/// (signed feature sum)_d = eps * (signed encoder sum); excluding every such
/// ratio (both signs, a finite superset) leaves only injective choices.
std::optional<std::set<Rat>> phi_obstructions(const FeatureTable& t, double guard) {
  const std::size_t k = t.vectors.size();
  const double work = 16.0 * static_cast<double>(k) * k * k * k * static_cast<double>(t.dim ? t.dim : 1);
  if (work > guard) return std::nullopt;

  std::set<Rat> bad;
  std::vector<std::size_t> idx(4);
  for (idx[0] = 0; idx[0] < k; ++idx[0])
    for (idx[1] = 0; idx[1] < k; ++idx[1])
      for (idx[2] = 0; idx[2] < k; ++idx[2])
        for (idx[3] = 0; idx[3] < k; ++idx[3])
          for (int signs = 0; signs < 16; ++signs) {
            Rat scalar(0);
            RatVec vec(t.dim, Rat(0));
            for (int pos = 0; pos < 4; ++pos) {
              const Rat s = (signs >> pos) & 1 ? Rat(-1) : Rat(1);
              scalar += s * t.encoded[idx[pos]];
              for (std::size_t d = 0; d < t.dim; ++d)
                vec[d] += s * t.vectors[idx[pos]][d];
            }
            if (scalar == Rat(0)) continue;
            for (std::size_t d = 0; d < t.dim; ++d) {
              bad.insert(vec[d] / scalar);
              bad.insert(-(vec[d] / scalar));
            }
          }
  return bad;
}

std::map<ColoredEdge, PhiVector> build_phi_vectors(const std::set<ColoredEdge>& universe,
                                                   const std::map<int, RatVec>& features,
                                                   const Rat& eps) {
  std::map<RatVec, Rat> encoder_table;
  for (const auto& [color, vec] : features) encoder_table.emplace(vec, Rat(color + 1));
  ColorEncoder f = [&encoder_table](const RatVec& v) { return encoder_table.at(v); };

  std::map<ColoredEdge, PhiVector> out;
  for (ColoredEdge ce : universe) {
    auto lo = features.find(ce.lo);
    auto hi = features.find(ce.hi);
    if (lo == features.end() || hi == features.end())
      throw MissingFiltrationValue("no feature vector for color " +
                                   std::to_string(lo == features.end() ? ce.lo : ce.hi));
    out.emplace(ce, phi_map(lo->second, hi->second, f, eps));
  }
  return out;
}

bool collision_free(const std::map<ColoredEdge, PhiVector>& phi) {
  std::set<PhiVector> seen;
  for (const auto& [ce, v] : phi)
    if (!seen.insert(v).second) return false;
  return true;
}

}  // namespace

Rat find_phi_epsilon(const std::map<int, RatVec>& color_features) {
  FeatureTable t = load_features(color_features);
  auto bad = phi_obstructions(t, 4e6);
  if (!bad) throw EnumerationTooLarge("separation enumeration above guard");
  return scan_epsilon([&bad](const Rat& c) { return bad->count(c) == 0; });
}

EdgeFiltration phi_filtration(const std::set<ColoredEdge>& universe,
                              const std::map<int, RatVec>& color_features,
                              Rat* eps_out) {
  if (universe.empty())
    return EdgeFiltration::from_table({}, EdgeFiltration::Construction::PhiMap);

  std::map<int, RatVec> features;
  std::set<int> used;
  for (ColoredEdge ce : universe) {
    used.insert(ce.lo);
    used.insert(ce.hi);
  }
  for (int color : used) {
    auto it = color_features.find(color);
    if (it == color_features.end())
      throw MissingFiltrationValue("no feature vector for color " + std::to_string(color));
    features.emplace(*it);
  }

  // The per-class collision scan below is the decisive injectivity
  // certificate; the obstruction enumeration additionally pins the default
  // eps to the separation condition and is worth its cost only on small
  // palettes (corpus pipelines call this once per graph pair).
  FeatureTable t = load_features(features);
  auto bad = phi_obstructions(t, 1e4);

  std::map<ColoredEdge, PhiVector> phi;
  const Rat eps = scan_epsilon([&](const Rat& candidate) {
    if (bad && bad->count(candidate) != 0) return false;
    phi = build_phi_vectors(universe, features, candidate);
    return collision_free(phi);
  });
  if (eps_out) *eps_out = eps;

  // Rank-rescale the induced order of PhiVectors into (0, 1/2]; composing
  // two injections keeps the table injective.
  std::map<PhiVector, ColoredEdge> ordered;
  for (const auto& [ce, v] : phi) ordered.emplace(v, ce);
  std::map<ColoredEdge, Rat> table;
  const long long total = static_cast<long long>(ordered.size());
  long long rank = 1;
  for (const auto& [v, ce] : ordered) table.emplace(ce, Rat(rank++, 2 * total));
  return EdgeFiltration::from_table(std::move(table), EdgeFiltration::Construction::PhiMap);
}

FiltrationMatrix::FiltrationMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
  for (int i = 0; i < n; ++i) a_[idx(i, i)] = Rat(0);
}

void FiltrationMatrix::set(int i, int j, Rat value) {
  a_[idx(i, j)] = value;
  a_[idx(j, i)] = std::move(value);
}

void FiltrationMatrix::set_raw(int i, int j, std::optional<Rat> value) {
  a_[idx(i, j)] = std::move(value);
}

FiltrationMatrix filtration_matrix(const Graph& g, const Coloring& c,
                                   const EdgeFiltration& ef) {
  if (c.size() != g.node_count()) throw LengthMismatch("coloring length != node count");
  FiltrationMatrix m(g.node_count());
  for (const Edge& e : g.edges())
    m.set(e.u, e.v, ef.value(make_colored_edge(c[e.u], c[e.v])));
  return m;
}

std::set<ColoredEdge> colored_edge_universe(const Graph& g, const Coloring& c) {
  auto multiset = colored_edge_multiset(g, c);
  return {multiset.begin(), multiset.end()};
}

}  // namespace ted
