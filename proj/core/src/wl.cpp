#include "ted/wl.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ted/errors.hpp"

namespace ted {

namespace {

// Partition equality: same equivalence classes regardless of ids.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  std::map<int, int> a2b;
  std::map<int, int> b2a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [ia, fresh_a] = a2b.emplace(a[i], b[i]);
    if (ia->second != b[i]) return false;
    auto [ib, fresh_b] = b2a.emplace(b[i], a[i]);
    if (ib->second != a[i]) return false;
  }
  return true;
}

// New ids are ranks of the sorted distinct keys, so they do not depend on
// node order: relabeling a graph relabels the coloring with it.
std::vector<int> refine_once(const Graph& g, const std::vector<int>& colors) {
  using Key = std::pair<int, std::vector<int>>;
  std::vector<Key> keys(colors.size());
  std::map<Key, int> intern;
  for (int v = 0; v < g.node_count(); ++v) {
    Key& key = keys[v];
    key.first = colors[v];
    key.second.reserve(g.neighbors(v).size());
    for (int u : g.neighbors(v)) key.second.push_back(colors[u]);
    std::sort(key.second.begin(), key.second.end());
    intern.emplace(key, 0);
  }
  int next_id = 0;
  for (auto& [key, id] : intern) id = next_id++;
  std::vector<int> next(colors.size());
  for (int v = 0; v < g.node_count(); ++v) next[v] = intern.at(keys[v]);
  return next;
}

}  // namespace

RefinementTrace wl_refine(const Graph& g, const Coloring& c0) {
  if (c0.size() != g.node_count()) throw LengthMismatch("coloring length != node count");
  RefinementTrace trace;
  trace.rounds.push_back(densify_coloring(c0.colors));
  for (;;) {
    std::vector<int> next = refine_once(g, trace.rounds.back().colors);
    bool stable = same_partition(trace.rounds.back().colors, next);
    Coloring c;
    c.colors = std::move(next);
    trace.rounds.push_back(std::move(c));
    if (stable) break;
  }
  trace.stable_round = static_cast<int>(trace.rounds.size()) - 2;
  Coloring& stable = trace.rounds[trace.stable_round];
  stable.provenance = Coloring::Provenance::WLStable;
  stable.stable_round = trace.stable_round;
  return trace;
}

std::pair<Coloring, Coloring> wl_refine_joint(const Graph& g, const Graph& h,
                                              const Coloring& c0g, const Coloring& c0h) {
  if (c0g.size() != g.node_count() || c0h.size() != h.node_count())
    throw LengthMismatch("coloring length != node count");
  Graph u = disjoint_union(g, h);
  Coloring c0;
  c0.colors = c0g.colors;
  c0.colors.insert(c0.colors.end(), c0h.colors.begin(), c0h.colors.end());
  RefinementTrace trace = wl_refine(u, c0);
  const Coloring& s = trace.stable();
  Coloring sg, sh;
  sg.colors.assign(s.colors.begin(), s.colors.begin() + g.node_count());
  sh.colors.assign(s.colors.begin() + g.node_count(), s.colors.end());
  sg.provenance = sh.provenance = Coloring::Provenance::WLStable;
  sg.stable_round = sh.stable_round = trace.stable_round;
  return {std::move(sg), std::move(sh)};
}

bool wl_distinguish(const Graph& g, const Graph& h) {
  return wl_distinguish(g, h, uniform_coloring(g.node_count()), uniform_coloring(h.node_count()));
}

bool wl_distinguish(const Graph& g, const Graph& h,
                    const Coloring& c0g, const Coloring& c0h) {
  if (g.node_count() != h.node_count()) return true;
  auto [sg, sh] = wl_refine_joint(g, h, c0g, c0h);
  return sg.histogram() != sh.histogram();
}

SumTrace wl_sum_rounds(const Graph& g, int rounds) {
  using boost::multiprecision::cpp_int;
  SumTrace trace;
  trace.rounds.emplace_back(g.node_count(), cpp_int(1));
  for (int r = 0; r < rounds; ++r) {
    const auto& prev = trace.rounds.back();
    std::vector<cpp_int> next(g.node_count());
    for (int v = 0; v < g.node_count(); ++v)
      for (int u : g.neighbors(v)) next[v] += prev[u];
    trace.rounds.push_back(std::move(next));
  }
  return trace;
}

bool wl_sum_distinguish(const Graph& g, const Graph& h, int rounds) {
  if (g.node_count() != h.node_count()) return true;
  SumTrace a = wl_sum_rounds(g, rounds);
  SumTrace b = wl_sum_rounds(h, rounds);
  for (std::size_t r = 0; r < a.rounds.size(); ++r) {
    auto ha = a.rounds[r];
    auto hb = b.rounds[r];
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return true;
  }
  return false;
}

DegreeAssumptionCheck check_degree_assumption(const Graph& g, const Coloring& c) {
  if (c.size() != g.node_count()) throw LengthMismatch("coloring length != node count");
  std::map<int, std::set<int>> degrees_by_color;
  for (int v = 0; v < g.node_count(); ++v) degrees_by_color[c[v]].insert(g.degree(v));
  DegreeAssumptionCheck out;
  for (auto& [color, degs] : degrees_by_color)
    if (degs.size() > 1) out.violations.push_back(color);
  out.ok = out.violations.empty();
  return out;
}

}  // namespace ted
