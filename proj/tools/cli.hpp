#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxpow/boxpow.hpp"

namespace boxpow::cli {

enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

namespace detail {

using io::json;

// Input/output streams for one invocation; "-" means these streams.
struct Streams {
  std::istream& in;
  std::ostream& out;
  bool stdinTaken = false;
};

inline std::string readSource(Streams& s, const std::string& path) {
  if (path == "-") {
    if (s.stdinTaken) throw std::invalid_argument("standard input can only be read once");
    s.stdinTaken = true;
    return {std::istreambuf_iterator<char>(s.in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline bool looksLikeDot(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text.compare(first, 5, "graph") == 0;
}

inline json parseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::FormatError(std::string("malformed JSON: ") + e.what());
  }
}

// Graph JSON, tree JSON or DOT.
inline Graph loadGraph(Streams& s, const std::string& path) {
  std::string text = readSource(s, path);
  if (looksLikeDot(text)) return io::graphFromDot(text);
  json doc = parseJson(text);
  if (doc.is_object() && doc.contains("parent")) return io::treeFromJson(doc).graph;
  return io::graphFromJson(doc);
}

inline io::LoadedTree loadTree(Streams& s, const std::string& path) {
  std::string text = readSource(s, path);
  if (looksLikeDot(text)) {
    Graph g = io::graphFromDot(text);
    if (!isTree(g)) throw io::FormatError("input graph is not a tree");
    return {std::move(g), std::nullopt};
  }
  return io::treeFromJson(parseJson(text));
}

inline void emit(Streams& s, const json& doc) { s.out << doc.dump() << "\n"; }

}  // namespace detail

/// Runs one command line (args excludes the program name). Diagnostics go to
/// `err`; results and witnesses go to `out`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  using detail::emit;
  detail::Streams streams{in, out};

  CLI::App app{"Box representations of tree powers and leaf powers", "boxpow"};
  app.require_subcommand(1);

  std::size_t k = 0, n = 0, legs = 0, legLength = 0;
  std::uint64_t seed = 0;
  std::string graphPath, repPath, mode;
  std::optional<Vertex> root;
  bool emitGraph = false;
  std::string labelPath;

  auto* gen = app.add_subcommand("gen", "Generate gadget trees, random trees and leaf roots");
  gen->require_subcommand(1);
  auto* genSk = gen->add_subcommand("sk", "Spider S_k: w(k) legs of length k");
  genSk->add_option("K", k)->required()->check(CLI::Range(1, 64));
  auto* genTk = gen->add_subcommand("tk", "Spider T_k: f(k) legs of length k+1");
  genTk->add_option("K", k)->required()->check(CLI::Range(1, 64));
  auto* genSpider = gen->add_subcommand("spider", "Spider with L legs of length D");
  genSpider->add_option("L", legs)->required()->check(CLI::Range(1, 1'000'000));
  genSpider->add_option("D", legLength)->required()->check(CLI::Range(1, 1'000'000));
  auto* genRandom = gen->add_subcommand("random-tree", "Uniform random tree via a Prüfer sequence");
  genRandom->add_option("N", n)->required()->check(CLI::Range(1, 1'000'000));
  genRandom->add_option("--seed", seed, "PRNG seed")->default_val(0);
  auto* genTight = gen->add_subcommand("tight-leafroot", "k-leaf root of (T_{k-2})^{k-2}");
  genTight->add_option("K", k)->required()->check(CLI::Range(3, 64));
  auto* genLeafRoot = gen->add_subcommand("random-leafroot", "Random tree with pendant leaves as a k-leaf root");
  genLeafRoot->add_option("N", n, "base tree size")->required()->check(CLI::Range(1, 100'000));
  genLeafRoot->add_option("K", k)->required()->check(CLI::Range(2, 1'000));
  genLeafRoot->add_option("--seed", seed, "PRNG seed")->default_val(0);

  auto* powerCmd = app.add_subcommand("power", "k-th power of a graph");
  powerCmd->add_option("G", graphPath)->required();
  powerCmd->add_option("K", k)->required()->check(CLI::Range(1, 1'000'000));

  auto* boxrep = app.add_subcommand("boxrep", "(k+1)-box representation of T^k");
  boxrep->add_option("T", graphPath)->required();
  boxrep->add_option("K", k)->required()->check(CLI::Range(1, 1'000'000));
  boxrep->add_option("--root", root, "non-leaf root vertex");

  auto* leafrep = app.add_subcommand("leafrep", "(k-1)-box representation of a k-leaf power");
  leafrep->add_option("LEAFROOT", graphPath)->required();
  leafrep->add_flag("--graph", emitGraph, "print the leaf power graph instead");

  auto* verify = app.add_subcommand("verify", "Check that REP realizes exactly the graph G");
  verify->add_option("G", graphPath)->required();
  verify->add_option("REP", repPath)->required();

  auto* recognize = app.add_subcommand("recognize", "Interval, chordal or AT-free recognition");
  recognize->add_option("MODE", mode)->required()->check(CLI::IsMember({"interval", "chordal", "at"}));
  recognize->add_option("G", graphPath)->required();

  auto* ccgraph = app.add_subcommand("ccgraph", "Critical clique graph with its vertex mapping");
  ccgraph->add_option("G", graphPath)->required();

  auto* convert = app.add_subcommand("convert", "Convert graphs and representations between formats");
  convert->add_option("FORMAT", mode)->required()->check(CLI::IsMember({"json", "dot", "csv", "svg"}));
  convert->add_option("INPUT", graphPath)->required();
  convert->add_option("--labels", labelPath, "graph whose labels annotate the SVG");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "boxpow: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      if (genSk->parsed()) emit(streams, io::toJson(buildSk(k)));
      else if (genTk->parsed()) emit(streams, io::toJson(buildTk(k)));
      else if (genSpider->parsed()) emit(streams, io::toJson(buildSpider({legs, legLength})));
      else if (genRandom->parsed()) emit(streams, io::toJson(randomTree(n, seed)));
      else if (genTight->parsed()) emit(streams, io::toJson(buildTightLeafPowerInstance(k).leafRoot));
      else emit(streams, io::toJson(randomLeafRoot(n, k, seed)));
      return kSuccess;
    }
    if (powerCmd->parsed()) {
      emit(streams, io::toJson(power(detail::loadGraph(streams, graphPath), k)));
      return kSuccess;
    }
    if (boxrep->parsed()) {
      auto tree = detail::loadTree(streams, graphPath);
      emit(streams, io::toJson(buildBoxRep(tree.graph, k, root ? root : tree.root)));
      return kSuccess;
    }
    if (leafrep->parsed()) {
      auto lr = io::leafRootFromJson(detail::parseJson(detail::readSource(streams, graphPath)));
      if (emitGraph) emit(streams, io::toJson(buildGraphFromLeafRoot(lr)));
      else emit(streams, io::toJson(buildLeafPowerBoxRep(lr)));
      return kSuccess;
    }
    if (verify->parsed()) {
      Graph g = detail::loadGraph(streams, graphPath);
      auto rep = io::boxRepFromJson(detail::parseJson(detail::readSource(streams, repPath)));
      auto verdict = verifyRepresentation(g, rep);
      emit(streams, io::toJson(verdict, &g));
      return verdict ? kSuccess : kNegative;
    }
    if (recognize->parsed()) {
      Graph g = detail::loadGraph(streams, graphPath);
      Verdict verdict;
      if (mode == "interval") {
        verdict = isIntervalGraph(g);
      } else if (mode == "chordal") {
        verdict = isChordal(g);
      } else if (auto triple = findAsteroidalTriple(g)) {
        verdict = Verdict::fail(std::move(*triple));
      }
      emit(streams, io::toJson(verdict, &g));
      return verdict ? kSuccess : kNegative;
    }
    if (ccgraph->parsed()) {
      auto [cc, mapping] = criticalCliqueGraph(detail::loadGraph(streams, graphPath));
      emit(streams, {{"graph", io::toJson(cc)}, {"mapping", io::toJson(mapping)}});
      return kSuccess;
    }
    // convert
    if (mode == "json" || mode == "dot") {
      Graph g = detail::loadGraph(streams, graphPath);
      if (mode == "json") emit(streams, io::toJson(g));
      else out << io::toDot(g);
      return kSuccess;
    }
    auto rep = io::boxRepFromJson(detail::parseJson(detail::readSource(streams, graphPath)));
    if (mode == "csv") {
      out << io::toCsv(rep);
    } else {
      std::optional<Graph> labels;
      if (!labelPath.empty()) labels = detail::loadGraph(streams, labelPath);
      if (labels && labels->vertexCount() != rep.vertexCount())
        throw std::invalid_argument("label graph does not match the representation");
      out << io::toSvg(rep, labels ? &*labels : nullptr);
    }
    return kSuccess;
  } catch (const std::exception& e) {
    err << "boxpow: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace boxpow::cli
