#include "ted/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ted/errors.hpp"

namespace fs = std::filesystem;

namespace ted {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

std::vector<long long> parse_ints(const std::string& line, const std::string& context) {
  std::string cleaned = line;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  std::vector<long long> out;
  long long v;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw ParseError("bad integer in " + context + ": '" + line + "'");
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path);
  out << bytes;
  if (!out) throw IOError("short write to " + path);
}

}  // namespace

Corpus parse_tudataset(const std::string& directory) {
  const std::string name = fs::path(directory).filename().string();
  const std::string prefix = (fs::path(directory) / name).string() + "_";

  const auto indicator_lines = read_lines(prefix + "graph_indicator.txt");
  std::vector<int> graph_of;  // node -> graph index (0-based)
  int graph_count = 0;
  for (std::size_t i = 0; i < indicator_lines.size(); ++i) {
    if (blank(indicator_lines[i])) continue;
    const auto vals = parse_ints(indicator_lines[i], "graph_indicator line " + std::to_string(i + 1));
    if (vals.size() != 1) throw ParseError("graph_indicator line " + std::to_string(i + 1));
    const int gid = static_cast<int>(vals[0]) - 1;
    if (gid < 0 || gid < graph_count - 1)
      throw RaggedIndicator("graph indicator not contiguous at node " + std::to_string(i + 1));
    if (gid > graph_count) throw RaggedIndicator("graph id gap at node " + std::to_string(i + 1));
    graph_count = std::max(graph_count, gid + 1);
    graph_of.push_back(gid);
  }
  const int total_nodes = static_cast<int>(graph_of.size());

  std::vector<int> base(graph_count, -1);  // first global node of each graph
  std::vector<int> sizes(graph_count, 0);
  for (int v = 0; v < total_nodes; ++v) {
    if (base[graph_of[v]] < 0) base[graph_of[v]] = v;
    ++sizes[graph_of[v]];
  }

  std::vector<std::vector<std::pair<int, int>>> edges(graph_count);
  const auto edge_lines = read_lines(prefix + "A.txt");
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    if (blank(edge_lines[i])) continue;
    const auto vals = parse_ints(edge_lines[i], "A.txt line " + std::to_string(i + 1));
    if (vals.size() != 2) throw ParseError("A.txt line " + std::to_string(i + 1));
    const int u = static_cast<int>(vals[0]) - 1;
    const int v = static_cast<int>(vals[1]) - 1;
    if (u < 0 || u >= total_nodes || v < 0 || v >= total_nodes)
      throw IndexError("node id out of range on A.txt line " + std::to_string(i + 1));
    if (graph_of[u] != graph_of[v])
      throw IndexError("edge crosses graphs on A.txt line " + std::to_string(i + 1));
    const int g = graph_of[u];
    edges[g].emplace_back(u - base[g], v - base[g]);
  }

  Corpus corpus;
  corpus.name = name;
  for (int g = 0; g < graph_count; ++g) corpus.graphs.push_back(build_graph(sizes[g], edges[g]));

  const std::string node_labels_path = prefix + "node_labels.txt";
  if (fs::exists(node_labels_path)) {
    const auto label_lines = read_lines(node_labels_path);
    std::vector<int> raw;
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
      if (blank(label_lines[i])) continue;
      const auto vals = parse_ints(label_lines[i], "node_labels line " + std::to_string(i + 1));
      if (vals.empty()) throw ParseError("node_labels line " + std::to_string(i + 1));
      raw.push_back(static_cast<int>(vals[0]));
    }
    if (static_cast<int>(raw.size()) != total_nodes)
      throw LengthMismatch("node label count != node count");
    // label values interned by sorted order so color ids agree across graphs
    std::map<int, int> intern;
    for (int v : raw) intern.emplace(v, 0);
    int next = 0;
    for (auto& [value, id] : intern) id = next++;
    corpus.initial_colorings.resize(graph_count);
    for (int g = 0; g < graph_count; ++g)
      corpus.initial_colorings[g].colors.resize(sizes[g]);
    for (int v = 0; v < total_nodes; ++v)
      corpus.initial_colorings[graph_of[v]].colors[v - base[graph_of[v]]] = intern.at(raw[v]);
  }

  const std::string graph_labels_path = prefix + "graph_labels.txt";
  if (fs::exists(graph_labels_path)) {
    const auto label_lines = read_lines(graph_labels_path);
    for (std::size_t i = 0; i < label_lines.size(); ++i) {
      if (blank(label_lines[i])) continue;
      const auto vals = parse_ints(label_lines[i], "graph_labels line " + std::to_string(i + 1));
      if (vals.empty()) throw ParseError("graph_labels line " + std::to_string(i + 1));
      corpus.labels.push_back(static_cast<int>(vals[0]));
    }
    if (static_cast<int>(corpus.labels.size()) != graph_count)
      throw LengthMismatch("graph label count != graph count");
  }
  return corpus;
}

std::pair<Graph, std::optional<Coloring>> parse_edge_list(const std::string& path) {
  const auto lines = read_lines(path);
  std::optional<int> node_count;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i]) || lines[i][0] == '#') continue;
    const auto vals = parse_ints(lines[i], "line " + std::to_string(i + 1));
    if (!node_count) {
      if (vals.size() != 1)
        throw ParseError("line " + std::to_string(i + 1) + ": expected node count");
      node_count = static_cast<int>(vals[0]);
      continue;
    }
    if (vals.size() != 2)
      throw ParseError("line " + std::to_string(i + 1) + ": expected 'u v'");
    edges.emplace_back(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
  }
  if (!node_count) throw ParseError("empty edge list file " + path);
  return {build_graph(*node_count, edges), std::nullopt};
}

namespace {

std::pair<Graph, std::optional<Coloring>> graph_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  Graph g = build_graph(n, edges);
  std::optional<Coloring> coloring;
  if (j.contains("colors")) {
    std::vector<int> raw = j.at("colors").get<std::vector<int>>();
    if (static_cast<int>(raw.size()) != n) throw LengthMismatch("colors length != n");
    coloring = densify_coloring(raw);
  }
  return {std::move(g), std::move(coloring)};
}

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

std::pair<Graph, std::optional<Coloring>> parse_json_graph(const std::string& path) {
  try {
    return graph_from_json(parse_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void export_diagram(const Diagram& d, DiagramFormat format, const std::string& path) {
  switch (format) {
    case DiagramFormat::Json:
      write_file(path, diagram_to_json(d).dump(2) + "\n");
      return;
    case DiagramFormat::Csv: {
      std::ostringstream os;
      os << "dim,birth,death\n";
      for (const auto& p : d.ph0)
        os << "0," << to_decimal(p.birth) << "," << (p.essential() ? "inf" : to_decimal(*p.death)) << "\n";
      for (const auto& p : d.ph1)
        os << "1," << to_decimal(p.birth) << "," << (p.essential() ? "inf" : to_decimal(*p.death)) << "\n";
      write_file(path, os.str());
      return;
    }
    case DiagramFormat::Svg:
      write_file(path, render_diagram_svg(d));
      return;
  }
}

Diagram import_diagram_json(const std::string& path) {
  try {
    return diagram_from_json(parse_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string render_diagram_svg(const Diagram& d) {
  // Fixed layout: unit square scaled to 360x360 with a 40px margin and a
  // marked band at the top for essential (death = inf) points.
  constexpr double kSize = 440.0;
  constexpr double kMargin = 40.0;
  constexpr double kPlot = 360.0;
  constexpr double kBand = 24.0;

  Rat max_coord(1, 2);
  for (const auto* part : {&d.ph0, &d.ph1})
    for (const auto& p : *part) {
      max_coord = std::max(max_coord, p.birth);
      if (!p.essential()) max_coord = std::max(max_coord, *p.death);
    }
  const double scale = kPlot / to_double(max_coord);

  auto fmt = [](double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
  };
  auto sx = [&](const Rat& birth) { return fmt(kMargin + to_double(birth) * scale); };
  auto sy = [&](const Rat& death) { return fmt(kMargin + kBand + kPlot - to_double(death) * scale); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSize) << "\" height=\""
     << fmt(kSize + kBand) << "\" viewBox=\"0 0 " << fmt(kSize) << " " << fmt(kSize + kBand)
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // infinity band
  os << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin - 10.0) << "\" width=\""
     << fmt(kPlot) << "\" height=\"" << fmt(kBand) << "\" fill=\"#f2f2f2\"/>\n";
  os << "<text x=\"" << fmt(kMargin - 30.0) << "\" y=\"" << fmt(kMargin + 6.0)
     << "\" font-size=\"12\">inf</text>\n";
  // axes and diagonal
  const double x0 = kMargin, y0 = kMargin + kBand + kPlot;
  os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0 + kPlot)
     << "\" y2=\"" << fmt(y0) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0) << "\" y2=\""
     << fmt(kMargin + kBand) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0 + kPlot)
     << "\" y2=\"" << fmt(kMargin + kBand) << "\" stroke=\"#cccccc\"/>\n";

  auto emit_points = [&](const std::vector<PersistencePoint>& points, const char* color) {
    for (const auto& p : points) {
      const std::string cx = sx(p.birth);
      const std::string cy = p.essential() ? fmt(kMargin + 2.0) : sy(*p.death);
      os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"" << color
         << "\"/>\n";
    }
  };
  emit_points(d.ph0, "#1f77b4");
  emit_points(d.ph1, "#d62728");
  os << "</svg>\n";
  return os.str();
}

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  Corpus corpus;
  switch (format) {
    case CorpusFormat::Tu:
      return parse_tudataset(path);
    case CorpusFormat::EdgeList: {
      auto [g, c] = parse_edge_list(path);
      corpus.name = fs::path(path).stem().string();
      corpus.graphs.push_back(std::move(g));
      if (c) corpus.initial_colorings.push_back(std::move(*c));
      return corpus;
    }
    case CorpusFormat::Json: {
      corpus.name = fs::path(path).stem().string();
      const nlohmann::json j = parse_json_file(path);
      try {
        std::vector<nlohmann::json> items;
        if (j.is_array())
          items.assign(j.begin(), j.end());
        else if (j.contains("graphs"))
          items.assign(j.at("graphs").begin(), j.at("graphs").end());
        else
          items.push_back(j);
        bool any_colors = false;
        for (const auto& item : items) any_colors = any_colors || item.contains("colors");
        for (const auto& item : items) {
          auto [g, c] = graph_from_json(item);
          if (any_colors) {
            if (!c) throw ParseError(path + ": colors present on some graphs only");
            corpus.initial_colorings.push_back(std::move(*c));
          }
          corpus.graphs.push_back(std::move(g));
        }
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
      }
      return corpus;
    }
  }
  throw Error("unhandled corpus format");
}

}  // namespace ted
