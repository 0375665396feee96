#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "box_rep.hpp"
#include "construction.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"
#include "verify.hpp"

namespace boxpow::io {

using nlohmann::json;

// Raised for any malformed document; the CLI maps it to exit code 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

inline std::size_t asIndex(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0)
    throw FormatError(std::string(what) + " must be a non-negative integer");
  return value.get<std::size_t>();
}

inline std::vector<std::string> readLabels(const json& doc) {
  if (!doc.contains("labels")) return {};
  const auto& labels = doc.at("labels");
  if (!labels.is_array()) throw FormatError("\"labels\" must be an array of strings");
  std::vector<std::string> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw FormatError("\"labels\" must be an array of strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

}  // namespace detail

// ---- Graph: {"n": int, "edges": [[u,v],...], "labels": [...]?} ----

inline json toJson(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json doc{{"n", g.vertexCount()}, {"edges", std::move(edges)}};
  if (g.hasLabels()) doc["labels"] = g.labels();
  return doc;
}

inline Graph graphFromJson(const json& doc) {
  const std::size_t n = detail::asIndex(detail::require(doc, "n"), "\"n\"");
  const auto& list = detail::require(doc, "edges");
  if (!list.is_array()) throw FormatError("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [u,v]");
    edges.emplace_back(detail::asIndex(e[0], "edge endpoint"), detail::asIndex(e[1], "edge endpoint"));
  }
  try {
    return Graph::fromEdges(n, edges, detail::readLabels(doc));
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
}

// ---- Tree: {"n": int, "parent": [...], "root": int, "labels": [...]?} ----

inline json toJson(const RootedTree& rt, const std::vector<std::string>& labels = {}) {
  json doc{{"n", rt.vertexCount()}, {"parent", rt.parents()}, {"root", rt.root()}};
  if (!labels.empty()) doc["labels"] = labels;
  return doc;
}

struct LoadedTree {
  Graph graph;                  // carries labels when present
  std::optional<Vertex> root;   // set for the parent-array format
};

/// Accepts the parent-array tree format or a generic graph that is a tree.
inline LoadedTree treeFromJson(const json& doc) {
  if (doc.is_object() && doc.contains("parent")) {
    const std::size_t n = detail::asIndex(detail::require(doc, "n"), "\"n\"");
    const auto& parentJson = doc.at("parent");
    if (!parentJson.is_array() || parentJson.size() != n)
      throw FormatError("\"parent\" must be an array of length n");
    std::vector<Vertex> parent;
    for (const auto& p : parentJson) parent.push_back(detail::asIndex(p, "parent entry"));
    Vertex root = detail::asIndex(detail::require(doc, "root"), "\"root\"");
    try {
      auto rt = RootedTree::fromParents(std::move(parent), root);
      return {rt.toGraph(detail::readLabels(doc)), root};
    } catch (const std::invalid_argument& err) {
      throw FormatError(err.what());
    }
  }
  Graph g = graphFromJson(doc);
  if (!isTree(g)) throw FormatError("input graph is not a tree");
  return {std::move(g), std::nullopt};
}

// ---- BoxRep: {"dimension": d, "boxes": [[[lo,hi],...], ...]} ----

inline json toJson(const BoxRep& rep) {
  json boxes = json::array();
  for (const auto& box : rep.boxes()) {
    json b = json::array();
    for (const auto& iv : box) b.push_back({iv.lo, iv.hi});
    boxes.push_back(std::move(b));
  }
  return {{"dimension", rep.dimension()}, {"boxes", std::move(boxes)}};
}

inline BoxRep boxRepFromJson(const json& doc) {
  const std::size_t d = detail::asIndex(detail::require(doc, "dimension"), "\"dimension\"");
  const auto& boxesJson = detail::require(doc, "boxes");
  if (!boxesJson.is_array()) throw FormatError("\"boxes\" must be an array");
  std::vector<std::vector<Interval>> boxes;
  try {
    for (const auto& b : boxesJson) {
      if (!b.is_array()) throw FormatError("each box must be an array of intervals");
      std::vector<Interval> box;
      for (const auto& iv : b) {
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number_integer() ||
            !iv[1].is_number_integer())
          throw FormatError("each interval must be a pair of integers [lo,hi]");
        box.emplace_back(iv[0].get<std::int64_t>(), iv[1].get<std::int64_t>());
      }
      boxes.push_back(std::move(box));
    }
    return BoxRep(d, std::move(boxes));
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
}

// ---- LeafRoot: {"k": int, "tree": <graph>, "leafToVertex": [[leaf, vertex], ...]} ----

inline json toJson(const LeafRoot& lr) {
  json pairs = json::array();
  for (auto [leaf, v] : lr.leafToVertex()) pairs.push_back({leaf, v});
  return {{"k", lr.k()}, {"tree", toJson(lr.tree())}, {"leafToVertex", std::move(pairs)}};
}

inline LeafRoot leafRootFromJson(const json& doc) {
  const std::size_t k = detail::asIndex(detail::require(doc, "k"), "\"k\"");
  Graph tree = graphFromJson(detail::require(doc, "tree"));
  const auto& pairs = detail::require(doc, "leafToVertex");
  if (!pairs.is_array()) throw FormatError("\"leafToVertex\" must be an array of pairs");
  std::map<Vertex, Vertex> leafToVertex;
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw FormatError("\"leafToVertex\" entries must be pairs");
    if (!leafToVertex.emplace(detail::asIndex(p[0], "leaf"), detail::asIndex(p[1], "vertex")).second)
      throw FormatError("leaf listed twice in \"leafToVertex\"");
  }
  try {
    return LeafRoot::fromLeafToVertex(std::move(tree), k, leafToVertex);
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
}

// ---- CliqueMapping ----

inline json toJson(const CliqueMapping& mapping) {
  return {{"classOf", mapping.classOf}, {"representatives", mapping.representatives}};
}

// ---- Verdict: {"ok": bool, "witness": {...} | null} ----

inline json toJson(const Verdict& verdict, const Graph* labelSource = nullptr) {
  auto names = [&](std::initializer_list<Vertex> vs) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(labelSource ? labelSource->label(v) : std::to_string(v));
    return out;
  };
  auto nameList = [&](const std::vector<Vertex>& vs) {
    json out = json::array();
    for (Vertex v : vs) out.push_back(labelSource ? labelSource->label(v) : std::to_string(v));
    return out;
  };
  json witness = std::visit(
      [&](const auto& w) -> json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<W, PairWitness>) {
          return {{"kind", "pair"},
                  {"u", w.u},
                  {"v", w.v},
                  {"labels", names({w.u, w.v})},
                  {"expectedAdjacent", w.expectedAdjacent},
                  {"coordinateOverlap", w.coordinateOverlap}};
        } else if constexpr (std::is_same_v<W, CycleWitness>) {
          return {{"kind", "chordless-cycle"}, {"cycle", w.cycle}, {"labels", nameList(w.cycle)}};
        } else if constexpr (std::is_same_v<W, TripleWitness>) {
          json paths = json::array();
          for (const auto& p : w.paths) paths.push_back(p);
          return {{"kind", "asteroidal-triple"},
                  {"triple", w.triple},
                  {"labels", names({w.triple[0], w.triple[1], w.triple[2]})},
                  {"paths", std::move(paths)}};
        } else {
          return {{"kind", "distance"},
                  {"u", w.u},
                  {"v", w.v},
                  {"labels", names({w.u, w.v})},
                  {"distance", w.distance},
                  {"adjacent", w.adjacent}};
        }
      },
      verdict.witness);
  json doc{{"ok", verdict.ok}, {"witness", std::move(witness)}};
  if (!verdict.eliminationOrder.empty()) doc["eliminationOrder"] = verdict.eliminationOrder;
  if (!verdict.supergraph.empty()) doc["supergraph"] = verdict.supergraph;
  return doc;
}

// ---- DOT ----

inline std::string quoteDot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// One node statement per vertex (so isolated vertices survive) and one
/// "u -- v" statement per edge in canonical order.
inline std::string toDot(const Graph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    out << "  " << v;
    if (g.hasLabels()) out << " [label=" << quoteDot(g.label(v)) << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

/// Reads the DOT subset written by toDot: numeric node ids, optional
/// label attributes, and undirected edge statements.
inline Graph graphFromDot(const std::string& text) {
  std::size_t pos = 0;
  auto skipSpace = [&] {
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      } else if (text.compare(pos, 2, "//") == 0) {
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  };
  auto word = [&] {
    skipSpace();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  };
  auto expect = [&](const std::string& token) {
    skipSpace();
    if (text.compare(pos, token.size(), token) != 0)
      throw FormatError("DOT: expected '" + token + "' at offset " + std::to_string(pos));
    pos += token.size();
  };
  auto number = [&] {
    std::string w = word();
    if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw FormatError("DOT: expected a numeric node id at offset " + std::to_string(pos));
    return static_cast<Vertex>(std::stoull(w));
  };
  auto quoted = [&] {
    expect("\"");
    std::string out;
    while (pos < text.size() && text[pos] != '"') {
      if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
      out += text[pos++];
    }
    expect("\"");
    return out;
  };

  if (word() != "graph") throw FormatError("DOT: expected an undirected 'graph'");
  skipSpace();
  if (pos < text.size() && text[pos] != '{') word();
  expect("{");

  std::map<Vertex, std::string> labels;
  std::vector<Edge> edges;
  std::size_t n = 0;
  bool anyLabel = false;
  for (;;) {
    skipSpace();
    if (pos >= text.size()) throw FormatError("DOT: missing closing '}'");
    if (text[pos] == '}') break;
    Vertex u = number();
    n = std::max(n, u + 1);
    labels.try_emplace(u);
    skipSpace();
    if (text.compare(pos, 2, "--") == 0) {
      pos += 2;
      Vertex v = number();
      n = std::max(n, v + 1);
      labels.try_emplace(v);
      edges.emplace_back(u, v);
    } else if (pos < text.size() && text[pos] == '[') {
      ++pos;
      if (word() != "label") throw FormatError("DOT: only the label attribute is supported");
      expect("=");
      labels[u] = quoted();
      anyLabel = true;
      expect("]");
    }
    skipSpace();
    if (pos < text.size() && text[pos] == ';') ++pos;
  }
  std::vector<std::string> labelList;
  if (anyLabel) {
    labelList.resize(n);
    for (Vertex v = 0; v < n; ++v) labelList[v] = labels.count(v) ? labels[v] : std::to_string(v);
  }
  try {
    return Graph::fromEdges(n, edges, std::move(labelList));
  } catch (const std::invalid_argument& err) {
    throw FormatError(std::string("DOT: ") + err.what());
  }
}

// ---- CSV / SVG for box representations ----

/// Header "vertex,lo_1,hi_1,...,lo_d,hi_d", one row per vertex.
inline std::string toCsv(const BoxRep& rep) {
  std::ostringstream out;
  out << "vertex";
  for (std::size_t c = 1; c <= rep.dimension(); ++c) out << ",lo_" << c << ",hi_" << c;
  out << "\n";
  for (Vertex v = 0; v < rep.vertexCount(); ++v) {
    out << v;
    for (const auto& iv : rep.box(v)) out << "," << iv.lo << "," << iv.hi;
    out << "\n";
  }
  return out.str();
}

/// Rectangle diagram on an integer grid; only defined for dimension 2.
/// Degenerate sides are drawn with a minimal extent so points stay visible.
inline std::string toSvg(const BoxRep& rep, const Graph* labelSource = nullptr) {
  if (rep.dimension() != 2) throw std::invalid_argument("SVG output needs a 2-dimensional representation");
  constexpr int cell = 40;
  constexpr int margin = 20;
  std::int64_t maxX = 0, maxY = 0;
  for (const auto& box : rep.boxes()) {
    maxX = std::max(maxX, box[0].hi);
    maxY = std::max(maxY, box[1].hi);
  }
  std::int64_t minX = maxX, minY = maxY;
  for (const auto& box : rep.boxes()) {
    minX = std::min(minX, box[0].lo);
    minY = std::min(minY, box[1].lo);
  }
  auto px = [&](std::int64_t x) { return margin + (x - minX) * cell; };
  auto py = [&](std::int64_t y) { return margin + (y - minY) * cell; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(maxX) + margin + cell / 4
      << "\" height=\"" << py(maxY) + margin + cell / 4 << "\">\n";
  for (Vertex v = 0; v < rep.vertexCount(); ++v) {
    const auto& b = rep.box(v);
    auto w = std::max<std::int64_t>((b[0].hi - b[0].lo) * cell, cell / 8);
    auto h = std::max<std::int64_t>((b[1].hi - b[1].lo) * cell, cell / 8);
    out << "  <rect x=\"" << px(b[0].lo) << "\" y=\"" << py(b[1].lo) << "\" width=\"" << w
        << "\" height=\"" << h << "\" fill=\"steelblue\" fill-opacity=\"0.15\" stroke=\"black\"/>\n";
    std::string name = labelSource ? labelSource->label(v) : std::to_string(v);
    std::string escaped;
    for (char c : name) {
      if (c == '<') escaped += "&lt;";
      else if (c == '>') escaped += "&gt;";
      else if (c == '&') escaped += "&amp;";
      else escaped += c;
    }
    out << "  <text x=\"" << px(b[0].lo) + 2 << "\" y=\"" << py(b[1].lo) + 12
        << "\" font-size=\"10\">" << escaped << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace boxpow::io
