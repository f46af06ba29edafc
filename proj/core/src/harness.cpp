#include "ted/harness.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "ted/errors.hpp"
#include "ted/wl.hpp"

namespace ted {

namespace {

constexpr int kOracleGuard = 10;
constexpr int kCodeGuard = 8;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> rows(g.node_count(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  return rows;
}

bool extend_mapping(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                    const std::vector<int>& deg_a, const std::vector<int>& deg_b,
                    std::vector<int>& image, std::uint32_t used, int next) {
  const int n = static_cast<int>(a.size());
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used & (1u << cand)) continue;
    if (deg_a[next] != deg_b[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next; ++prev) {
      const bool adj_a = a[next] & (1u << prev);
      const bool adj_b = b[cand] & (1u << image[prev]);
      if (adj_a != adj_b) { ok = false; break; }
    }
    if (!ok) continue;
    image[next] = cand;
    if (extend_mapping(a, b, deg_a, deg_b, image, used | (1u << cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() > kOracleGuard || h.node_count() > kOracleGuard)
    throw TooLarge("isomorphism oracle limited to " + std::to_string(kOracleGuard) + " nodes");
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;

  std::vector<int> deg_g(g.node_count()), deg_h(h.node_count());
  for (int v = 0; v < g.node_count(); ++v) deg_g[v] = g.degree(v);
  for (int v = 0; v < h.node_count(); ++v) deg_h[v] = h.degree(v);
  auto sorted_g = deg_g;
  auto sorted_h = deg_h;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;

  std::vector<int> image(g.node_count(), -1);
  return extend_mapping(adjacency_masks(g), adjacency_masks(h), deg_g, deg_h, image, 0, 0);
}

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.node_count();
  if (n > kCodeGuard)
    throw TooLarge("canonical code limited to " + std::to_string(kCodeGuard) + " nodes");

  const auto rows = adjacency_masks(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (rows[perm[i]] & (1u << perm[j])) code |= 1ULL << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n == 0 ? 0 : best;
}

namespace {

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (code & (1ULL << bit)) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

}  // namespace

const std::vector<Graph>& nonisomorphic_graphs(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::scoped_lock lock(mutex);

  if (n > kCodeGuard) throw TooLarge("catalog limited to " + std::to_string(kCodeGuard) + " nodes");
  if (n < 0) n = 0;

  // every k-node class arises from some (k-1)-node class plus one node with
  // some attachment subset, so the catalog is built level by level
  for (int k = 0; k <= n; ++k) {
    if (cache.count(k)) continue;
    if (k == 0) {
      cache.emplace(0, std::vector<Graph>{build_graph(0, {})});
      continue;
    }
    std::set<std::uint64_t> codes;
    for (const Graph& base : cache.at(k - 1)) {
      for (std::uint32_t subset = 0; subset < (1u << (k - 1)); ++subset) {
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : base.edges()) edges.emplace_back(e.u, e.v);
        for (int v = 0; v < k - 1; ++v)
          if (subset & (1u << v)) edges.emplace_back(v, k - 1);
        codes.insert(canonical_code(build_graph(k, edges)));
      }
    }
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(graph_from_code(k, code));
    cache.emplace(k, std::move(out));
  }
  return cache.at(n);
}

const char* cell_name(Cell c) {
  switch (c) {
    case Cell::Both: return "both";
    case Cell::TedOnly: return "ted_only";
    case Cell::WlOnly: return "wl_only";
    case Cell::Neither: return "neither";
  }
  return "?";
}

namespace {

PairDecision decide_pair(const Graph& g, const Graph& h, PersistenceStats* stats) {
  PairDecision d;
  const auto [cg, ch] = wl_refine_joint(g, h, uniform_coloring(g.node_count()),
                                        uniform_coloring(h.node_count()));
  d.wl_distinguished = g.node_count() != h.node_count() || cg.histogram() != ch.histogram();

  std::set<ColoredEdge> universe = colored_edge_universe(g, cg);
  for (ColoredEdge ce : colored_edge_universe(h, ch)) universe.insert(ce);
  const EdgeFiltration ef = phi_filtration(universe, default_color_features(universe));

  PersistenceStats sg, sh;
  const Diagram dg = vr_persistence(filtration_matrix(g, cg, ef), &sg);
  const Diagram dh = vr_persistence(filtration_matrix(h, ch, ef), &sh);
  if (stats) {
    stats->edges_processed = sg.edges_processed + sh.edges_processed;
    stats->find_calls = sg.find_calls + sh.find_calls;
    stats->merges = sg.merges + sh.merges;
  }
  d.ted_distinguished = !ted_equal(dg, dh);

  if (d.wl_distinguished && d.ted_distinguished) d.cell = Cell::Both;
  else if (d.ted_distinguished) d.cell = Cell::TedOnly;
  else if (d.wl_distinguished) d.cell = Cell::WlOnly;
  else d.cell = Cell::Neither;
  return d;
}

}  // namespace

PairDecision discriminate_pair(const Graph& g, const Graph& h) {
  return decide_pair(g, h, nullptr);
}

DiscriminationReport discriminate_corpus(const std::vector<Graph>& graphs,
                                         const DiscriminateConfig& cfg,
                                         const std::string& corpus_id) {
  struct PairResult {
    PairDecision decision;
    std::optional<bool> isomorphic;
    bool failed = false;
    PersistenceStats stats;
    bool oracle_ran = false;
  };

  const int count = static_cast<int>(graphs.size());
  std::vector<PairRef> pairs;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) pairs.push_back({i, j});

  std::vector<PairResult> results(pairs.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= pairs.size()) return;
      const Graph& g = graphs[pairs[k].a];
      const Graph& h = graphs[pairs[k].b];
      PairResult& r = results[k];
      try {
        r.decision = decide_pair(g, h, &r.stats);
        if (g.node_count() <= cfg.oracle_max && h.node_count() <= cfg.oracle_max) {
          r.oracle_ran = true;
          r.isomorphic = brute_force_isomorphic(g, h);
        }
      } catch (const Error&) {
        r.failed = true;
      }
    }
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  // deterministic merge in pair order
  DiscriminationReport rep;
  rep.corpus_id = corpus_id;
  rep.graph_count = graphs.size();
  rep.total_pairs = pairs.size();
  auto witness = [&cfg](std::vector<PairRef>& list, PairRef p) {
    if (static_cast<int>(list.size()) < cfg.max_witnesses) list.push_back(p);
  };
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const PairResult& r = results[k];
    if (r.failed) {
      ++rep.pair_errors;
      continue;
    }
    rep.union_find_ops += r.stats.edges_processed;
    if (r.oracle_ran) ++rep.oracle_calls;
    else ++rep.oracle_unknown;
    const bool iso = r.isomorphic.value_or(false);
    if (iso) {
      ++rep.isomorphic;
      witness(rep.witnesses_isomorphic, pairs[k]);
      if (r.decision.wl_distinguished || r.decision.ted_distinguished)
        ++rep.isomorphic_distinguished;
    }
    if (r.decision.wl_distinguished) ++rep.wl_distinguished;
    if (r.decision.ted_distinguished) ++rep.ted_distinguished;
    switch (r.decision.cell) {
      case Cell::Both: ++rep.both; witness(rep.witnesses_both, pairs[k]); break;
      case Cell::TedOnly: ++rep.ted_only; witness(rep.witnesses_ted_only, pairs[k]); break;
      case Cell::WlOnly: ++rep.wl_only; witness(rep.witnesses_wl_only, pairs[k]); break;
      case Cell::Neither: ++rep.neither; break;
    }
  }
  return rep;
}

namespace {

nlohmann::json refs_to_json(const std::vector<PairRef>& refs) {
  nlohmann::json out = nlohmann::json::array();
  for (const PairRef& p : refs) out.push_back({p.a, p.b});
  return out;
}

}  // namespace

nlohmann::json DiscriminationReport::to_json() const {
  return {
      {"corpus_id", corpus_id},
      {"graph_count", graph_count},
      {"pair_counts",
       {{"total", total_pairs},
        {"isomorphic", isomorphic},
        {"oracle_unknown", oracle_unknown},
        {"wl_distinguished", wl_distinguished},
        {"ted_distinguished", ted_distinguished},
        {"both", both},
        {"ted_only", ted_only},
        {"wl_only", wl_only},
        {"neither", neither},
        {"errors", pair_errors}}},
      {"soundness", {{"isomorphic_distinguished", isomorphic_distinguished}}},
      {"witnesses",
       {{"both", refs_to_json(witnesses_both)},
        {"ted_only", refs_to_json(witnesses_ted_only)},
        {"wl_only", refs_to_json(witnesses_wl_only)},
        {"isomorphic", refs_to_json(witnesses_isomorphic)}}},
      {"work", {{"union_find_ops", union_find_ops}, {"oracle_calls", oracle_calls}}},
  };
}

std::string DiscriminationReport::to_table() const {
  std::ostringstream os;
  os << "corpus: " << corpus_id << " (" << graph_count << " graphs, " << total_pairs
     << " pairs)\n";
  auto row = [&os](const char* k, std::size_t v) {
    os << "  " << k;
    for (std::size_t i = std::string(k).size(); i < 22; ++i) os << ' ';
    os << v << "\n";
  };
  row("isomorphic (oracle)", isomorphic);
  row("oracle unknown", oracle_unknown);
  row("wl distinguished", wl_distinguished);
  row("ted distinguished", ted_distinguished);
  row("both", both);
  row("ted only", ted_only);
  row("wl only", wl_only);
  row("neither", neither);
  row("errors", pair_errors);
  os << "  consistent            " << (consistent() ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace ted
