#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ted/rational.hpp"

namespace ted {

using Token = std::string;
using TokenMultiset = std::vector<Token>;  // order irrelevant, repeats allowed

/// Finite token domain with a rational feature vector per token.
struct FeatureMap {
  std::map<Token, RatVec> values;
  int dim = 1;

  std::vector<Token> domain() const;
  const RatVec& value(const Token& t) const;  // throws UnknownToken
};

/// Smallest constant vector (v,...,v), v = p/q with q <= 64, outside the
/// difference set DF = {f1(x) - f2(y)}; shifting f2 by it makes the two
/// images disjoint. Deterministic.
RatVec find_separating_epsilon(const FeatureMap& f1, const FeatureMap& f2);

/// Exact check that {f1(x)} and {f2(y) + eps} are disjoint,
/// equivalently eps is outside DF.
bool is_separating(const FeatureMap& f1, const FeatureMap& f2, const RatVec& eps);

/// Combined multiset encoding
///   g(X_1, ..., X_k) = sum_{x in X_1} f_1(x)
///                    + sum_{i>=2} (1 + eps_i) * sum_{x in X_i} f_i(x),
/// intended to be injective on tuples of multisets of size <= size_bound.
/// Injectivity is certified by enumeration (certify_uniqueness), never
/// assumed.
struct IntegratedEncoding {
  std::vector<FeatureMap> components;
  std::vector<Rat> epsilons;  // eps_2 ... eps_k, one per component after the first
  int size_bound = 1;

  nlohmann::json to_json() const;
  static IntegratedEncoding from_json(const nlohmann::json& j);
};

/// Exact evaluation of g. Throws LengthMismatch (component count),
/// UnknownToken, and SizeBoundExceeded.
RatVec integrate(const IntegratedEncoding& enc,
                 const std::vector<TokenMultiset>& multisets);

struct CollisionWitness {
  std::vector<TokenMultiset> a;
  std::vector<TokenMultiset> b;
};

struct UniquenessCertificate {
  bool unique = false;
  std::size_t tuples_checked = 0;
  std::optional<CollisionWitness> collision;
};

/// Brute-force enumeration of every tuple of multisets with sizes 0..bound;
/// unique iff no two tuples share a g value. Throws EnumerationTooLarge when
/// the tuple count exceeds 10^6.
UniquenessCertificate certify_uniqueness(const IntegratedEncoding& enc, int bound);

/// Scalar construction for certified encodings over small domains: tokens get
/// powers of the smallest prime > bound (positional digits), epsilons start
/// from find_separating_epsilon and advance along the deterministic scan
/// until certify_uniqueness passes.
IntegratedEncoding build_positional_encoding(const std::vector<std::vector<Token>>& domains,
                                             int bound);

/// One-hot construction used for corpus-scale fused fingerprints: component i
/// occupies its own coordinate block, so g stores the (scaled) multiplicity
/// of every token and is injective for any multiset sizes. Certification by
/// enumeration still applies when feasible.
IntegratedEncoding build_counting_encoding(const std::vector<std::vector<Token>>& domains,
                                           int bound);

}  // namespace ted
