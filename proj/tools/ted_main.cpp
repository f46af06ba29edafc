// ted: topological edge diagrams of colored graphs.
//
// Subcommands: diagram, compare, wl, discriminate, certify-filtration, fuse.
// Exit codes: compare uses 0 = distinguished by the diagrams, 1 = not,
// 2 = error; discriminate and certify-filtration exit 1 when a consistency
// check fails, 2 on error.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ted/errors.hpp"
#include "ted/filtration.hpp"
#include "ted/harness.hpp"
#include "ted/integration.hpp"
#include "ted/io.hpp"
#include "ted/persistence.hpp"
#include "ted/wl.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

ted::CorpusFormat resolve_format(const std::string& path, const std::string& flag) {
  if (flag == "tu") return ted::CorpusFormat::Tu;
  if (flag == "edgelist") return ted::CorpusFormat::EdgeList;
  if (flag == "json") return ted::CorpusFormat::Json;
  if (fs::is_directory(path)) return ted::CorpusFormat::Tu;
  if (fs::path(path).extension() == ".json") return ted::CorpusFormat::Json;
  return ted::CorpusFormat::EdgeList;
}

ted::Corpus load(const std::string& path, const std::string& format_flag) {
  return ted::load_corpus(path, resolve_format(path, format_flag));
}

ted::Coloring initial_coloring_of(const ted::Corpus& corpus, std::size_t i) {
  if (corpus.has_colorings()) return corpus.initial_colorings[i];
  return ted::uniform_coloring(corpus.graphs[i].node_count());
}

ted::Graph single_graph(const std::string& path, const std::string& format_flag) {
  ted::Corpus corpus = load(path, format_flag);
  if (corpus.graphs.size() != 1)
    throw ted::Error(path + " holds " + std::to_string(corpus.graphs.size()) +
                     " graphs; expected one");
  return corpus.graphs[0];
}

/// Stable WL colorings with a corpus-wide shared id space, computed on the
/// disjoint union of all graphs.
std::vector<ted::Coloring> joint_stable_colorings(const ted::Corpus& corpus) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> offsets;
  int total = 0;
  for (const ted::Graph& g : corpus.graphs) {
    offsets.push_back(total);
    for (const ted::Edge& e : g.edges()) edges.emplace_back(total + e.u, total + e.v);
    total += g.node_count();
  }
  ted::Coloring c0;
  c0.colors.resize(total, 0);
  if (corpus.has_colorings())
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
      for (int v = 0; v < corpus.graphs[i].node_count(); ++v)
        c0.colors[offsets[i] + v] = corpus.initial_colorings[i][v];

  const ted::Coloring stable = ted::wl_refine(ted::build_graph(total, edges), c0).stable();
  std::vector<ted::Coloring> out(corpus.graphs.size());
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    out[i].colors.assign(stable.colors.begin() + offsets[i],
                         stable.colors.begin() + offsets[i] + corpus.graphs[i].node_count());
    out[i].provenance = ted::Coloring::Provenance::WLStable;
  }
  return out;
}

std::set<ted::ColoredEdge> corpus_universe(const ted::Corpus& corpus,
                                           const std::vector<ted::Coloring>& colorings) {
  std::set<ted::ColoredEdge> universe;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i)
    for (ted::ColoredEdge ce : ted::colored_edge_universe(corpus.graphs[i], colorings[i]))
      universe.insert(ce);
  return universe;
}

std::string numbered_path(const std::string& base, std::size_t index, std::size_t total) {
  if (total == 1) return base;
  fs::path p(base);
  const std::string stem = p.stem().string();
  const std::string ext = p.extension().string();
  return (p.parent_path() / (stem + "." + std::to_string(index) + ext)).string();
}

int run_diagram(const std::string& input, const std::string& format_flag,
                const std::string& coloring_mode, const std::string& out,
                const std::string& emit) {
  const ted::Corpus corpus = load(input, format_flag);
  std::vector<ted::Diagram> diagrams;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const ted::Graph& g = corpus.graphs[i];
    if (coloring_mode == "wl") {
      diagrams.push_back(ted::lgvr_diagram(g, initial_coloring_of(corpus, i)));
    } else {
      const ted::Coloring c = initial_coloring_of(corpus, i);
      const auto universe = ted::colored_edge_universe(g, c);
      const auto ef = ted::phi_filtration(universe, ted::default_color_features(universe));
      diagrams.push_back(ted::ted_diagram(g, c, ef));
    }
  }

  if (out.empty()) {
    json all = json::array();
    for (const auto& d : diagrams) all.push_back(ted::diagram_to_json(d));
    std::cout << all.dump(2) << "\n";
    return 0;
  }
  ted::DiagramFormat fmt = ted::DiagramFormat::Json;
  if (emit == "csv") fmt = ted::DiagramFormat::Csv;
  else if (emit == "svg") fmt = ted::DiagramFormat::Svg;
  for (std::size_t i = 0; i < diagrams.size(); ++i)
    ted::export_diagram(diagrams[i], fmt, numbered_path(out, i, diagrams.size()));
  return 0;
}

int run_compare(const std::string& input_a, const std::string& input_b,
                const std::string& format_flag) {
  const ted::Graph a = single_graph(input_a, format_flag);
  const ted::Graph b = single_graph(input_b, format_flag);
  const ted::PairDecision d = ted::discriminate_pair(a, b);
  std::cout << "wl_distinguish: " << (d.wl_distinguished ? "true" : "false") << "\n";
  std::cout << "ted_equal:      " << (d.ted_distinguished ? "false" : "true") << "\n";
  std::cout << "cell:           " << ted::cell_name(d.cell) << "\n";
  return d.ted_distinguished ? 0 : 1;
}

int run_wl(const std::string& input, const std::string& format_flag, int rounds,
           const std::string& variant) {
  const ted::Corpus corpus = load(input, format_flag);
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const ted::Graph& g = corpus.graphs[i];
    std::cout << "graph " << i << " (" << g.node_count() << " nodes, " << g.edge_count()
              << " edges)\n";
    if (variant == "sum") {
      const int budget = rounds > 0 ? rounds : g.node_count();
      const ted::SumTrace trace = ted::wl_sum_rounds(g, budget);
      for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
        std::map<boost::multiprecision::cpp_int, int> hist;
        for (const auto& v : trace.rounds[r]) ++hist[v];
        std::cout << "  round " << r << ":";
        for (const auto& [value, count] : hist) std::cout << " " << value << "x" << count;
        std::cout << "\n";
      }
      continue;
    }
    const ted::RefinementTrace trace = ted::wl_refine(g, initial_coloring_of(corpus, i));
    const std::size_t shown = rounds > 0
        ? std::min(trace.rounds.size(), static_cast<std::size_t>(rounds) + 1)
        : trace.rounds.size();
    for (std::size_t r = 0; r < shown; ++r) {
      std::cout << "  round " << r << ":";
      for (const auto& [color, count] : trace.rounds[r].histogram())
        std::cout << " " << color << "x" << count;
      std::cout << "\n";
    }
    std::cout << "  stable after round " << trace.stable_round << ":";
    for (const auto& [color, count] : trace.stable().histogram())
      std::cout << " " << color << "x" << count;
    std::cout << "\n";
  }
  return 0;
}

int run_discriminate(const std::string& input, const std::string& format_flag, int oracle_max,
                     int jobs, const std::string& report_path) {
  const ted::Corpus corpus = load(input, format_flag);
  ted::DiscriminateConfig cfg;
  cfg.oracle_max = oracle_max;
  cfg.jobs = jobs;
  const auto started = std::chrono::steady_clock::now();
  const ted::DiscriminationReport report =
      ted::discriminate_corpus(corpus.graphs, cfg, corpus.name);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  std::cout << report.to_table();
  std::cout << "  wall clock            " << elapsed.count() << " ms\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw ted::IOError("cannot write " + report_path);
    out << report.to_json().dump(2) << "\n";
  }
  return report.consistent() ? 0 : 1;
}

int run_certify(const std::string& input, const std::string& format_flag) {
  const ted::Corpus corpus = load(input, format_flag);
  const auto colorings = joint_stable_colorings(corpus);
  const auto universe = corpus_universe(corpus, colorings);
  std::cout << "corpus: " << corpus.name << " (" << corpus.graphs.size() << " graphs)\n";
  std::cout << "colored-edge universe: " << universe.size() << " classes\n";
  if (universe.empty()) {
    std::cout << "nothing to certify (no edges)\n";
    return 0;
  }

  bool ok = true;
  const auto rank = ted::canonical_rank_filtration(universe);
  const bool rank_ok = rank.injective_scan();
  ok = ok && rank_ok;
  std::cout << "canonical_rank: " << rank.size() << " values, collision scan "
            << (rank_ok ? "PASS" : "FAIL") << "\n";

  ted::Rat eps;
  const auto phi = ted::phi_filtration(universe, ted::default_color_features(universe), &eps);
  const bool phi_ok = phi.injective_scan();
  ok = ok && phi_ok;
  std::cout << "phi: " << phi.size() << " values, eps = " << ted::to_string(eps)
            << ", collision scan " << (phi_ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_fuse(const std::string& input, const std::string& format_flag, int bound) {
  const ted::Corpus corpus = load(input, format_flag);
  const auto colorings = joint_stable_colorings(corpus);
  const auto universe = corpus_universe(corpus, colorings);
  const auto ef = ted::phi_filtration(universe, ted::default_color_features(universe));

  auto point_token = [](int dim, const ted::PersistencePoint& p) {
    return std::to_string(dim) + ":" + ted::to_string(p.birth) + ":" +
           (p.essential() ? "inf" : ted::to_string(*p.death));
  };

  std::vector<ted::TokenMultiset> diagram_tokens(corpus.graphs.size());
  std::vector<ted::TokenMultiset> color_tokens(corpus.graphs.size());
  std::set<ted::Token> diagram_domain;
  std::set<ted::Token> color_domain;
  std::size_t max_size = 1;
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const ted::Diagram d = ted::ted_diagram(corpus.graphs[i], colorings[i], ef);
    for (const auto& p : d.ph0) diagram_tokens[i].push_back(point_token(0, p));
    for (const auto& p : d.ph1) diagram_tokens[i].push_back(point_token(1, p));
    for (int v = 0; v < corpus.graphs[i].node_count(); ++v)
      color_tokens[i].push_back("c" + std::to_string(colorings[i][v]));
    diagram_domain.insert(diagram_tokens[i].begin(), diagram_tokens[i].end());
    color_domain.insert(color_tokens[i].begin(), color_tokens[i].end());
    max_size = std::max({max_size, diagram_tokens[i].size(), color_tokens[i].size()});
  }

  const int effective_bound = bound > 0 ? bound : static_cast<int>(max_size);
  const ted::IntegratedEncoding enc = ted::build_counting_encoding(
      {{diagram_domain.begin(), diagram_domain.end()},
       {color_domain.begin(), color_domain.end()}},
      effective_bound);

  json certification;
  try {
    const auto cert = ted::certify_uniqueness(enc, effective_bound);
    certification = {{"mode", "enumeration"},
                     {"unique", cert.unique},
                     {"tuples_checked", cert.tuples_checked}};
    if (!cert.unique) throw ted::Error("encoding failed the uniqueness certificate");
  } catch (const ted::EnumerationTooLarge&) {
    // Exhaustive enumeration is out of reach; verify faithfulness pairwise
    // on the corpus: equal fingerprints must mean equal component multisets.
    std::size_t clashes = 0;
    std::map<ted::RatVec, std::size_t> seen;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
      auto g = ted::integrate(enc, {diagram_tokens[i], color_tokens[i]});
      auto [it, fresh] = seen.emplace(std::move(g), i);
      if (!fresh) {
        auto a = diagram_tokens[it->second];
        auto b = diagram_tokens[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        auto ca = color_tokens[it->second];
        auto cb = color_tokens[i];
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (a != b || ca != cb) ++clashes;
      }
    }
    certification = {{"mode", "pairwise"},
                     {"unique", clashes == 0},
                     {"pairs_checked", corpus.graphs.size()}};
    if (clashes != 0) throw ted::Error("fused fingerprints are not faithful");
  }

  json fingerprints = json::array();
  for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
    const auto g = ted::integrate(enc, {diagram_tokens[i], color_tokens[i]});
    json vec = json::array();
    for (const ted::Rat& r : g) vec.push_back(ted::to_string(r));
    fingerprints.push_back(std::move(vec));
  }

  const json out = {{"corpus", corpus.name},
                    {"bound", effective_bound},
                    {"certification", certification},
                    {"encoding", enc.to_json()},
                    {"fingerprints", std::move(fingerprints)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological edge diagrams of colored graphs"};
  app.require_subcommand(1);

  std::string input, input_b, format_flag, out_path, report_path;
  std::string coloring_mode = "wl";
  std::string emit = "json";
  std::string variant = "hash";
  int rounds = 0;
  int oracle_max = 10;
  int jobs = 1;
  int bound = 0;

  auto* diagram = app.add_subcommand("diagram", "compute diagrams per graph");
  diagram->add_option("input", input)->required();
  diagram->add_option("--format", format_flag)->check(CLI::IsMember({"tu", "edgelist", "json"}));
  diagram->add_option("--coloring", coloring_mode)->check(CLI::IsMember({"wl", "initial"}));
  diagram->add_option("--out", out_path);
  diagram->add_option("--emit", emit)->check(CLI::IsMember({"json", "csv", "svg"}));

  auto* compare = app.add_subcommand("compare", "compare two graphs");
  compare->add_option("inputA", input)->required();
  compare->add_option("inputB", input_b)->required();
  compare->add_option("--format", format_flag)->check(CLI::IsMember({"tu", "edgelist", "json"}));

  auto* wl = app.add_subcommand("wl", "print color refinement traces");
  wl->add_option("input", input)->required();
  wl->add_option("--rounds", rounds);
  wl->add_option("--variant", variant)->check(CLI::IsMember({"hash", "sum"}));
  wl->add_option("--format", format_flag)->check(CLI::IsMember({"tu", "edgelist", "json"}));

  auto* discriminate = app.add_subcommand("discriminate", "pairwise corpus report");
  discriminate->add_option("corpus", input)->required();
  discriminate->add_option("--oracle-max", oracle_max);
  discriminate->add_option("--jobs", jobs);
  discriminate->add_option("--report", report_path);
  discriminate->add_option("--format", format_flag)
      ->check(CLI::IsMember({"tu", "edgelist", "json"}));

  auto* certify = app.add_subcommand("certify-filtration", "injectivity certificates");
  certify->add_option("corpus", input)->required();
  certify->add_option("--format", format_flag)->check(CLI::IsMember({"tu", "edgelist", "json"}));

  auto* fuse = app.add_subcommand("fuse", "fused diagram+coloring fingerprints");
  fuse->add_option("corpus", input)->required();
  fuse->add_option("--bound", bound);
  fuse->add_option("--format", format_flag)->check(CLI::IsMember({"tu", "edgelist", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*diagram) return run_diagram(input, format_flag, coloring_mode, out_path, emit);
    if (*compare) return run_compare(input, input_b, format_flag);
    if (*wl) return run_wl(input, format_flag, rounds, variant);
    if (*discriminate)
      return run_discriminate(input, format_flag, oracle_max, jobs, report_path);
    if (*certify) return run_certify(input, format_flag);
    if (*fuse) return run_fuse(input, format_flag, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
