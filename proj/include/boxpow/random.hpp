#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <vector>

#include "construction.hpp"
#include "graph.hpp"

namespace boxpow {

// Reproducible draws: std::mt19937_64 (fully specified by the standard)
// reduced with a plain modulo, so sequences match across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    return engine_() % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Decodes a Prüfer sequence over n = sequence.size() + 2 vertices, always
/// removing the smallest current leaf.
inline Graph treeFromPrufer(const std::vector<Vertex>& sequence) {
  const std::size_t n = sequence.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  for (Vertex v : sequence) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::fromEdges(n, edges);
}

/// Uniform random labeled tree on n vertices: n-2 draws below(n) form the
/// Prüfer sequence. n = 1 and n = 2 give the single vertex and single edge.
inline Graph randomTree(std::size_t n, SeededRng& rng) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (n == 1) return Graph(1);
  std::vector<Vertex> sequence(n - 2);
  for (auto& x : sequence) x = rng.below(n);
  return treeFromPrufer(sequence);
}

inline Graph randomTree(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  return randomTree(n, rng);
}

/// Random tree on `baseVertices` vertices; then each vertex in index order
/// receives below(3) pendant leaves. All leaves of the result are mapped to
/// graph vertices through a seeded shuffle.
inline LeafRoot randomLeafRoot(std::size_t baseVertices, std::size_t k, SeededRng& rng) {
  Graph base = randomTree(baseVertices, rng);
  auto edges = base.edges();
  std::size_t n = baseVertices;
  for (Vertex v = 0; v < baseVertices; ++v)
    for (auto count = rng.below(3); count > 0; --count) edges.emplace_back(v, n++);
  Graph tree = Graph::fromEdges(n, edges);
  std::vector<Vertex> leaves;
  for (Vertex x = 0; x < n; ++x)
    if (tree.degree(x) <= 1) leaves.push_back(x);
  rng.shuffle(leaves);
  return LeafRoot(std::move(tree), k, std::move(leaves));
}

inline LeafRoot randomLeafRoot(std::size_t baseVertices, std::size_t k, std::uint64_t seed) {
  SeededRng rng(seed);
  return randomLeafRoot(baseVertices, k, rng);
}

}  // namespace boxpow
