#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include <nlohmann/json_fwd.hpp>

#include "ted/graph.hpp"
#include "ted/rational.hpp"

namespace ted {

/// Injective map from colored-edge classes to rationals in (0, 1/2].
/// Construction is deterministic: the same key universe yields the same
/// table regardless of insertion order.
class EdgeFiltration {
 public:
  enum class Construction { CanonicalRank, PhiMap, Explicit };

  EdgeFiltration() = default;

  /// Validates injectivity and the (0, 1/2] bound.
  static EdgeFiltration from_table(std::map<ColoredEdge, Rat> table,
                                   Construction construction = Construction::Explicit);

  bool contains(ColoredEdge ce) const { return table_.count(ce) != 0; }
  const Rat& value(ColoredEdge ce) const;  // throws MissingFiltrationValue
  const std::map<ColoredEdge, Rat>& table() const { return table_; }
  std::size_t size() const { return table_.size(); }
  Construction construction() const { return construction_; }

  /// Full pairwise collision scan with exact comparison; the injectivity
  /// certificate required of every constructed filtration.
  bool injective_scan() const;

  nlohmann::json to_json() const;
  static EdgeFiltration from_json(const nlohmann::json& j);

 private:
  std::map<ColoredEdge, Rat> table_;
  Construction construction_ = Construction::Explicit;
};

/// Classes sorted in canonical order; rank r of R receives r/(2R).
/// Throws EmptyUniverse.
EdgeFiltration canonical_rank_filtration(const std::set<ColoredEdge>& universe);

/// Image of an unordered feature pair under the pairing map:
/// sum = x' + y' and diff = |x' - y'| where x' = x + eps*f(x)*(1,...,1).
/// Order-invariant in {x, y} by construction.
struct PhiVector {
  RatVec sum;
  RatVec diff;
  friend auto operator<=>(const PhiVector&, const PhiVector&) = default;
};

/// Scalar encoder over feature vectors; must be injective on the universe it
/// is used with.
using ColorEncoder = std::function<Rat(const RatVec&)>;

/// Exact evaluation of the pairing map. Throws DimensionMismatch.
PhiVector phi_map(const RatVec& x, const RatVec& y, const ColorEncoder& f, const Rat& eps);

/// Default scalar encoder and feature vectors for dense color ids:
/// feature(c) = [c + 1], encoder(feature(c)) = c + 1.
std::map<int, RatVec> default_color_features(const std::set<ColoredEdge>& universe);

/// Separation scan for the pairing map: smallest admissible eps = p/q
/// (q <= 64) such that no signed sum of up to four encoded features collides
/// with a constant feature direction. Enumerates the finite obstruction set
/// exactly; falls back to build-and-scan when the enumeration guard (~4e6
/// operations) is exceeded. Deterministic for a fixed feature set.
Rat find_phi_epsilon(const std::map<int, RatVec>& color_features);

/// Applies the pairing map to every class of the universe, then rescales the
/// induced order of PhiVectors to ranks in (0, 1/2]. Throws
/// NonInjectiveFeatures when the feature assignment collides. An empty
/// universe yields an empty filtration. `eps_out`, when given, receives the
/// chosen separation epsilon.
EdgeFiltration phi_filtration(const std::set<ColoredEdge>& universe,
                              const std::map<int, RatVec>& color_features,
                              Rat* eps_out = nullptr);

/// Symmetric |V| x |V| matrix with zero diagonal; off-diagonal entries are
/// filtration values on edges and infinity (nullopt) elsewhere.
class FiltrationMatrix {
 public:
  FiltrationMatrix() = default;
  explicit FiltrationMatrix(int n);

  int size() const { return n_; }
  const std::optional<Rat>& at(int i, int j) const { return a_[idx(i, j)]; }
  bool finite(int i, int j) const { return a_[idx(i, j)].has_value(); }

  /// Symmetric setter for both (i,j) and (j,i).
  void set(int i, int j, Rat value);

  /// One-sided setter; exists so tests can build malformed matrices.
  void set_raw(int i, int j, std::optional<Rat> value);

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<std::optional<Rat>> a_;
};

/// The distance matrix of (G, C, ef): entry (i,j) = ef({{C(i), C(j)}}) if
/// {i,j} is an edge, infinity otherwise, 0 on the diagonal. Throws
/// MissingFiltrationValue when ef is not total on the colored edges of G.
FiltrationMatrix filtration_matrix(const Graph& g, const Coloring& c,
                                   const EdgeFiltration& ef);

/// The set of colored-edge classes of (G, C).
std::set<ColoredEdge> colored_edge_universe(const Graph& g, const Coloring& c);

}  // namespace ted
