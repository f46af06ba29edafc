#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ted/graph.hpp"
#include "ted/persistence.hpp"

namespace ted {

/// A parsed graph dataset. initial_colorings is either empty or one coloring
/// per graph (dense ids interned consistently across the corpus).
struct Corpus {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<Coloring> initial_colorings;
  std::vector<int> labels;  // empty when the dataset has no graph labels

  bool has_colorings() const { return !initial_colorings.empty(); }
};

/// Reads a TUDataset-layout directory: <DS>_A.txt, <DS>_graph_indicator.txt
/// and optional <DS>_node_labels.txt / <DS>_graph_labels.txt, where DS is the
/// directory name. 1-based indices become 0-based; duplicate directed edge
/// entries are merged. Without node labels the colorings are uniform.
/// Throws MissingFile, IndexError, RaggedIndicator, ParseError.
Corpus parse_tudataset(const std::string& directory);

/// Plain text: first line is the node count, each further non-empty line one
/// "u v" edge. Throws ParseError naming the offending line.
std::pair<Graph, std::optional<Coloring>> parse_edge_list(const std::string& path);

/// JSON object {"n": int, "edges": [[u,v], ...]} with optional "colors".
std::pair<Graph, std::optional<Coloring>> parse_json_graph(const std::string& path);

enum class DiagramFormat { Json, Csv, Svg };

/// Bit-stable export: points are written in canonical order with fixed
/// formatting, so identical diagrams produce identical bytes. JSON keeps
/// exact "p/q" rationals; CSV and SVG use shortest round-trip decimals.
void export_diagram(const Diagram& d, DiagramFormat format, const std::string& path);

Diagram import_diagram_json(const std::string& path);

std::string render_diagram_svg(const Diagram& d);

enum class CorpusFormat { Tu, EdgeList, Json };

/// Loads any of the supported inputs into a corpus (single-graph files yield
/// a one-graph corpus).
Corpus load_corpus(const std::string& path, CorpusFormat format);

}  // namespace ted
