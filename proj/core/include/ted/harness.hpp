#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ted/graph.hpp"
#include "ted/persistence.hpp"

namespace ted {

/// Exact isomorphism test by backtracking over degree-compatible node maps.
/// Test oracle only; throws TooLarge above 10 nodes.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

/// Upper-triangle adjacency bits minimized over all node permutations;
/// equal codes iff isomorphic. Throws TooLarge above 8 nodes.
std::uint64_t canonical_code(const Graph& g);

/// All non-isomorphic simple graphs on n nodes, in ascending canonical-code
/// order. Built by extending the (n-1)-node catalog with one node per
/// attachment subset; cached. Counts follow 1, 1, 2, 4, 11, 34, 156, 1044.
const std::vector<Graph>& nonisomorphic_graphs(int n);

enum class Cell { Both, TedOnly, WlOnly, Neither };
const char* cell_name(Cell c);

struct PairDecision {
  bool wl_distinguished = false;
  bool ted_distinguished = false;
  Cell cell = Cell::Neither;
};

/// Uniform initial colorings, joint refinement, and one shared filtration
/// built on the union of both graphs' colored-edge universes; a filtration
/// shared by both sides is what makes the diagram comparison meaningful.
PairDecision discriminate_pair(const Graph& g, const Graph& h);

struct DiscriminateConfig {
  int oracle_max = 10;    // brute-force isomorphism guard
  int jobs = 1;
  int max_witnesses = 3;  // example pairs recorded per cell
};

struct PairRef {
  int a = 0;
  int b = 0;
};

struct DiscriminationReport {
  std::string corpus_id;
  std::size_t graph_count = 0;

  std::size_t total_pairs = 0;
  std::size_t isomorphic = 0;       // oracle-confirmed
  std::size_t oracle_unknown = 0;   // above the oracle guard
  std::size_t wl_distinguished = 0;
  std::size_t ted_distinguished = 0;
  std::size_t both = 0;
  std::size_t ted_only = 0;
  std::size_t wl_only = 0;          // must stay 0; nonzero is a hard failure
  std::size_t neither = 0;
  std::size_t pair_errors = 0;

  std::size_t isomorphic_distinguished = 0;  // soundness violations, must stay 0

  // deterministic work counters; no wall-clock so reports are byte-stable
  std::size_t union_find_ops = 0;
  std::size_t oracle_calls = 0;

  std::vector<PairRef> witnesses_both;
  std::vector<PairRef> witnesses_ted_only;
  std::vector<PairRef> witnesses_wl_only;
  std::vector<PairRef> witnesses_isomorphic;

  /// wl_only == 0 and no isomorphic pair in a distinguished cell.
  bool consistent() const { return wl_only == 0 && isomorphic_distinguished == 0; }

  nlohmann::json to_json() const;
  std::string to_table() const;
};

/// Classifies every unordered pair; per-pair failures are recorded, not
/// fatal. Deterministic for fixed input regardless of cfg.jobs.
DiscriminationReport discriminate_corpus(const std::vector<Graph>& graphs,
                                         const DiscriminateConfig& cfg,
                                         const std::string& corpus_id);

}  // namespace ted
