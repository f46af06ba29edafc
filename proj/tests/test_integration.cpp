#include <doctest.h>

#include <random>

#include <nlohmann/json.hpp>

#include "ted/errors.hpp"
#include "ted/integration.hpp"

using namespace ted;

namespace {

FeatureMap scalar_map(std::initializer_list<std::pair<const char*, long long>> entries) {
  FeatureMap f;
  f.dim = 1;
  for (auto& [token, value] : entries) f.values.emplace(token, RatVec{Rat(value)});
  return f;
}

}  // namespace

TEST_CASE("find_separating_epsilon avoids the difference set") {
  auto f1 = scalar_map({{"x", 0}});
  auto f2 = scalar_map({{"y", 0}});
  auto eps = find_separating_epsilon(f1, f2);
  REQUIRE(eps.size() == 1);
  CHECK(eps[0] == Rat(1, 64));  // smallest scan candidate outside DF = {0}
  CHECK(is_separating(f1, f2, eps));

  auto g1 = scalar_map({{"a", 1}, {"b", 2}});
  auto g2 = scalar_map({{"c", 0}, {"d", 3}});
  auto eps2 = find_separating_epsilon(g1, g2);
  // DF = {1, -2, 2, -1}
  for (long long df : {1, -2, 2, -1}) CHECK(eps2[0] != Rat(df));
  CHECK(is_separating(g1, g2, eps2));

  // zero shift is admissible exactly when the images are already disjoint
  auto h1 = scalar_map({{"a", 1}});
  auto h2 = scalar_map({{"b", 5}});
  CHECK(is_separating(h1, h2, RatVec{Rat(0)}));
  CHECK_FALSE(is_separating(h1, h1, RatVec{Rat(0)}));
}

TEST_CASE("integrate evaluates the shifted-sum formula exactly") {
  IntegratedEncoding enc = build_positional_encoding({{"a", "b", "c"}, {"x", "y", "z"}}, 2);
  REQUIRE(enc.components.size() == 2);
  REQUIRE(enc.epsilons.size() == 1);

  // single component sum of one element
  auto single = integrate(enc, {{"a"}, {}});
  CHECK(single == enc.components[0].value("a"));

  auto zero = integrate(enc, {{}, {}});
  CHECK(zero == RatVec{Rat(0)});

  auto manual = vec_add(vec_add(enc.components[0].value("a"), enc.components[0].value("b")),
                        vec_scale(Rat(1) + enc.epsilons[0], enc.components[1].value("z")));
  CHECK(integrate(enc, {{"a", "b"}, {"z"}}) == manual);

  CHECK_THROWS_AS(integrate(enc, {{"q"}, {}}), UnknownToken);
  CHECK_THROWS_AS(integrate(enc, {{"a", "a", "b"}, {}}), SizeBoundExceeded);
  CHECK_THROWS_AS(integrate(enc, {{"a"}}), LengthMismatch);
}

TEST_CASE("two components over 3-token domains, bound 2: all 100 tuples distinct") {
  IntegratedEncoding enc = build_positional_encoding({{"a", "b", "c"}, {"x", "y", "z"}}, 2);
  auto cert = certify_uniqueness(enc, 2);
  CHECK(cert.unique);
  CHECK(cert.tuples_checked == 100);  // (1 + 3 + 6)^2
}

TEST_CASE("certify_uniqueness finds collisions for constant features") {
  FeatureMap constant;
  constant.dim = 1;
  constant.values = {{"a", {Rat(1)}}, {"b", {Rat(1)}}};
  IntegratedEncoding enc;
  enc.components = {constant, constant};
  enc.epsilons = {Rat(0)};
  enc.size_bound = 2;
  auto cert = certify_uniqueness(enc, 2);
  CHECK_FALSE(cert.unique);
  REQUIRE(cert.collision.has_value());
  CHECK(integrate(enc, cert.collision->a) == integrate(enc, cert.collision->b));
  CHECK(cert.collision->a != cert.collision->b);
}

TEST_CASE("built encodings certify for bounds 1..3 over domains up to size 5") {
  std::vector<Token> d1{"t0", "t1", "t2", "t3", "t4"};
  std::vector<Token> d2{"u0", "u1", "u2"};
  for (int bound : {1, 2, 3}) {
    IntegratedEncoding enc = build_positional_encoding({d1, d2}, bound);
    auto cert = certify_uniqueness(enc, bound);
    CHECK(cert.unique);
  }
}

TEST_CASE("enumeration guard") {
  std::vector<Token> big;
  for (int i = 0; i < 100; ++i) big.push_back("t" + std::to_string(i));
  IntegratedEncoding enc = build_counting_encoding({big, big}, 3);
  CHECK_THROWS_AS(certify_uniqueness(enc, 3), EnumerationTooLarge);
}

TEST_CASE("counting encoding: equal fingerprints force equal component multisets") {
  std::vector<Token> d1{"p", "q", "r", "s"};
  std::vector<Token> d2{"k", "l", "m"};
  IntegratedEncoding enc = build_counting_encoding({d1, d2}, 6);

  std::mt19937 rng(61);
  auto random_multiset = [&rng](const std::vector<Token>& domain) {
    std::uniform_int_distribution<int> size(0, 6);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(domain.size()) - 1);
    TokenMultiset out;
    const int k = size(rng);
    for (int i = 0; i < k; ++i) out.push_back(domain[pick(rng)]);
    std::sort(out.begin(), out.end());
    return out;
  };

  std::map<RatVec, std::pair<TokenMultiset, TokenMultiset>> seen;
  for (int trial = 0; trial < 500; ++trial) {
    auto x1 = random_multiset(d1);
    auto x2 = random_multiset(d2);
    auto g = integrate(enc, {x1, x2});
    auto [it, fresh] = seen.emplace(g, std::make_pair(x1, x2));
    if (!fresh) {
      CHECK(it->second.first == x1);
      CHECK(it->second.second == x2);
    }
  }
}

TEST_CASE("integrate is invariant under reordering within each multiset") {
  IntegratedEncoding enc = build_positional_encoding({{"a", "b", "c"}, {"x", "y"}}, 3);
  CHECK(integrate(enc, {{"a", "b", "c"}, {"x", "y"}}) ==
        integrate(enc, {{"c", "a", "b"}, {"y", "x"}}));
}

TEST_CASE("encoding JSON round trip") {
  IntegratedEncoding enc = build_positional_encoding({{"a", "b"}, {"x"}}, 2);
  IntegratedEncoding back = IntegratedEncoding::from_json(enc.to_json());
  CHECK(back.size_bound == enc.size_bound);
  CHECK(back.epsilons == enc.epsilons);
  REQUIRE(back.components.size() == enc.components.size());
  for (std::size_t i = 0; i < back.components.size(); ++i)
    CHECK(back.components[i].values == enc.components[i].values);
  CHECK(integrate(back, {{"a", "b"}, {"x"}}) == integrate(enc, {{"a", "b"}, {"x"}}));
}
