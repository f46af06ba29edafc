#include "ted/integration.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "detail/epsilon_scan.hpp"
#include "ted/errors.hpp"

namespace ted {

std::vector<Token> FeatureMap::domain() const {
  std::vector<Token> out;
  out.reserve(values.size());
  for (const auto& [t, v] : values) out.push_back(t);
  return out;
}

const RatVec& FeatureMap::value(const Token& t) const {
  auto it = values.find(t);
  if (it == values.end()) throw UnknownToken("token '" + t + "' not in domain");
  return it->second;
}

namespace {

std::set<RatVec> difference_set(const FeatureMap& f1, const FeatureMap& f2) {
  std::set<RatVec> df;
  for (const auto& [x1, v1] : f1.values)
    for (const auto& [x2, v2] : f2.values) df.insert(vec_sub(v1, v2));
  return df;
}

}  // namespace

RatVec find_separating_epsilon(const FeatureMap& f1, const FeatureMap& f2) {
  if (f1.dim != f2.dim) throw DimensionMismatch("feature maps of unequal dimension");
  const std::set<RatVec> df = difference_set(f1, f2);
  const Rat v = detail::scan_epsilon([&](const Rat& c) {
    return df.count(RatVec(static_cast<std::size_t>(f1.dim), c)) == 0;
  });
  return RatVec(static_cast<std::size_t>(f1.dim), v);
}

bool is_separating(const FeatureMap& f1, const FeatureMap& f2, const RatVec& eps) {
  for (const auto& [x1, v1] : f1.values)
    for (const auto& [x2, v2] : f2.values)
      if (vec_sub(v1, v2) == eps) return false;
  return true;
}

RatVec integrate(const IntegratedEncoding& enc, const std::vector<TokenMultiset>& multisets) {
  if (multisets.size() != enc.components.size())
    throw LengthMismatch("expected " + std::to_string(enc.components.size()) +
                         " multisets, got " + std::to_string(multisets.size()));
  if (enc.components.empty()) return {};
  RatVec acc(static_cast<std::size_t>(enc.components[0].dim), Rat(0));
  for (std::size_t i = 0; i < multisets.size(); ++i) {
    if (static_cast<int>(multisets[i].size()) > enc.size_bound)
      throw SizeBoundExceeded("multiset " + std::to_string(i) + " has " +
                              std::to_string(multisets[i].size()) + " > bound " +
                              std::to_string(enc.size_bound) + " elements");
    RatVec part(acc.size(), Rat(0));
    for (const Token& t : multisets[i]) part = vec_add(part, enc.components[i].value(t));
    if (i > 0) part = vec_scale(Rat(1) + enc.epsilons[i - 1], part);
    acc = vec_add(acc, part);
  }
  return acc;
}

namespace {

/// All multisets of sizes 0..bound over `domain`, as sorted token lists.
std::vector<TokenMultiset> bounded_multisets(const std::vector<Token>& domain, int bound) {
  std::vector<TokenMultiset> out{{}};
  std::vector<TokenMultiset> frontier{{}};
  for (int size = 1; size <= bound; ++size) {
    std::vector<TokenMultiset> next;
    for (const TokenMultiset& base : frontier) {
      // extend with tokens >= the last one to enumerate each multiset once
      std::size_t start = 0;
      if (!base.empty())
        start = static_cast<std::size_t>(
            std::lower_bound(domain.begin(), domain.end(), base.back()) - domain.begin());
      for (std::size_t t = start; t < domain.size(); ++t) {
        TokenMultiset ext = base;
        ext.push_back(domain[t]);
        next.push_back(std::move(ext));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

UniquenessCertificate certify_uniqueness(const IntegratedEncoding& enc, int bound) {
  std::vector<std::vector<TokenMultiset>> per_component;
  double total = 1;
  for (const FeatureMap& f : enc.components) {
    per_component.push_back(bounded_multisets(f.domain(), bound));
    total *= static_cast<double>(per_component.back().size());
    if (total > 1e6)
      throw EnumerationTooLarge("uniqueness enumeration above 1e6 tuples");
  }

  IntegratedEncoding bounded = enc;
  bounded.size_bound = std::max(bounded.size_bound, bound);

  UniquenessCertificate cert;
  std::map<RatVec, std::vector<std::size_t>> seen;
  std::vector<std::size_t> odometer(per_component.size(), 0);
  std::vector<TokenMultiset> tuple(per_component.size());
  for (;;) {
    for (std::size_t i = 0; i < odometer.size(); ++i) tuple[i] = per_component[i][odometer[i]];
    RatVec g = integrate(bounded, tuple);
    ++cert.tuples_checked;
    auto [it, fresh] = seen.emplace(std::move(g), odometer);
    if (!fresh) {
      CollisionWitness w;
      for (std::size_t i = 0; i < odometer.size(); ++i) {
        w.a.push_back(per_component[i][it->second[i]]);
        w.b.push_back(per_component[i][odometer[i]]);
      }
      cert.collision = std::move(w);
      cert.unique = false;
      return cert;
    }
    // advance odometer
    std::size_t pos = 0;
    while (pos < odometer.size() && ++odometer[pos] == per_component[pos].size()) {
      odometer[pos] = 0;
      ++pos;
    }
    if (pos == odometer.size()) break;
  }
  cert.unique = true;
  return cert;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

IntegratedEncoding build_positional_encoding(const std::vector<std::vector<Token>>& domains,
                                             int bound) {
  int base = bound + 1;
  while (!is_prime(base)) ++base;

  IntegratedEncoding enc;
  enc.size_bound = bound;
  Rat power(1);
  for (const auto& domain : domains) {
    FeatureMap f;
    f.dim = 1;
    std::vector<Token> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    for (const Token& t : sorted) {
      power *= Rat(base);
      f.values.emplace(t, RatVec{power});
    }
    enc.components.push_back(std::move(f));
  }

  // Epsilons start at the separating value and advance along the scan until
  // the enumeration certificate passes.
  std::vector<std::set<Rat>> rejected(enc.components.size() > 0 ? enc.components.size() - 1 : 0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    enc.epsilons.clear();
    for (std::size_t i = 1; i < enc.components.size(); ++i) {
      const std::set<RatVec> df = difference_set(enc.components[0], enc.components[i]);
      const std::set<Rat>& skip = rejected[i - 1];
      enc.epsilons.push_back(detail::scan_epsilon([&](const Rat& c) {
        return skip.count(c) == 0 && df.count(RatVec{c}) == 0;
      }));
    }
    if (enc.components.size() <= 1) return enc;
    if (certify_uniqueness(enc, bound).unique) return enc;
    for (std::size_t i = 0; i + 1 < enc.components.size(); ++i)
      rejected[i].insert(enc.epsilons[i]);
  }
  throw Error("no certified epsilon assignment found");
}

IntegratedEncoding build_counting_encoding(const std::vector<std::vector<Token>>& domains,
                                           int bound) {
  std::size_t dim = 0;
  for (const auto& d : domains) dim += d.size();

  IntegratedEncoding enc;
  enc.size_bound = bound;
  std::size_t offset = 0;
  for (const auto& domain : domains) {
    FeatureMap f;
    f.dim = static_cast<int>(dim);
    std::vector<Token> sorted = domain;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      RatVec v(dim, Rat(0));
      v[offset + j] = Rat(1);
      f.values.emplace(sorted[j], std::move(v));
    }
    offset += sorted.size();
    enc.components.push_back(std::move(f));
  }
  for (std::size_t i = 1; i < enc.components.size(); ++i)
    enc.epsilons.push_back(
        find_separating_epsilon(enc.components[0], enc.components[i]).at(0));
  return enc;
}

nlohmann::json IntegratedEncoding::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const FeatureMap& f : components) {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [t, v] : f.values) {
      nlohmann::json vec = nlohmann::json::array();
      for (const Rat& r : v) vec.push_back(to_string(r));
      values[t] = std::move(vec);
    }
    comps.push_back({{"dim", f.dim}, {"values", std::move(values)}});
  }
  nlohmann::json eps = nlohmann::json::array();
  for (const Rat& e : epsilons) eps.push_back(to_string(e));
  return {{"size_bound", size_bound}, {"epsilons", std::move(eps)}, {"components", std::move(comps)}};
}

IntegratedEncoding IntegratedEncoding::from_json(const nlohmann::json& j) {
  IntegratedEncoding enc;
  enc.size_bound = j.at("size_bound").get<int>();
  for (const auto& e : j.at("epsilons")) enc.epsilons.push_back(parse_rational(e.get<std::string>()));
  for (const auto& c : j.at("components")) {
    FeatureMap f;
    f.dim = c.at("dim").get<int>();
    for (const auto& [token, vec] : c.at("values").items()) {
      RatVec v;
      for (const auto& r : vec) v.push_back(parse_rational(r.get<std::string>()));
      f.values.emplace(token, std::move(v));
    }
    enc.components.push_back(std::move(f));
  }
  return enc;
}

}  // namespace ted
