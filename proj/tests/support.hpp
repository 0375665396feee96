#pragma once

// Fixtures and independent oracles shared by the test binaries. Nothing here
// calls into the construction or recognition code it is used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxpow/box_rep.hpp"
#include "boxpow/graph.hpp"

namespace boxpow::testing {

inline Graph pathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::fromEdges(n, edges);
}

inline Graph cycleGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::fromEdges(n, edges);
}

inline Graph starGraph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::fromEdges(leaves + 1, edges);
}

inline Graph edgesOf(std::size_t n, std::initializer_list<Edge> edges) {
  std::vector<Edge> list(edges);
  return Graph::fromEdges(n, list);
}

// Random tree by attaching vertex v to a uniformly chosen earlier vertex,
// then relabeling with a random permutation.
inline Graph randomAttachmentTree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    Vertex p = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.emplace_back(perm[p], perm[v]);
  }
  return Graph::fromEdges(n, edges);
}

inline Graph randomGraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::fromEdges(n, edges);
}

// All-pairs distances by Floyd-Warshall; `none` marks unreachable pairs.
inline constexpr std::size_t none = static_cast<std::size_t>(-1);

inline std::vector<std::vector<std::size_t>> floydWarshall(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, none));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex u : g.neighbors(v)) d[v][u] = 1;
  }
  for (Vertex m = 0; m < n; ++m)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (d[a][m] != none && d[m][b] != none && d[a][m] + d[m][b] < d[a][b])
          d[a][b] = d[a][m] + d[m][b];
  return d;
}

// Straight-line re-evaluation of the leg-count recurrences, in 64-bit.
inline std::uint64_t wReference(unsigned i) {
  if (i == 1) return 1;
  if (i == 2) return 3;
  std::uint64_t choose = std::uint64_t(i - 1) * (i - 2) / 2;
  return 2 * (i - 1) + 1 + (choose * 4 * (wReference(i - 2) - 1) + 1);
}

inline std::uint64_t fReference(unsigned k) { return 2 * k * (wReference(k) - 1) + 1; }

// Brute-force interval recognition: walk the left-to-right sequence of
// interval endpoints. Opening v requires every open interval to be a
// neighbor of v and every closed one a non-neighbor; closing v requires all
// of v's neighbors to have been opened. Visited (opened, closed) states are
// memoized, so every endpoint ordering is covered without repetition.
class IntervalOracle {
 public:
  explicit IntervalOracle(const Graph& g) : n_(g.vertexCount()), nbr_(n_, 0) {
    if (n_ > 16) throw std::invalid_argument("oracle limited to 16 vertices");
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) nbr_[v] |= 1u << u;
  }

  bool isInterval() { return search(0, 0); }

 private:
  bool search(std::uint32_t opened, std::uint32_t closed) {
    const std::uint32_t all = (n_ == 32 ? ~0u : (1u << n_) - 1);
    if (closed == all) return true;
    std::uint64_t key = (std::uint64_t(opened) << 32) | closed;
    if (!dead_.insert(key).second) return false;
    const std::uint32_t open = opened & ~closed;
    for (Vertex v = 0; v < n_; ++v) {
      std::uint32_t bit = 1u << v;
      if (!(opened & bit)) {
        if ((open & ~nbr_[v]) == 0 && (closed & nbr_[v]) == 0 && search(opened | bit, closed))
          return true;
      } else if (open & bit) {
        if ((nbr_[v] & ~opened) == 0 && search(opened, closed | bit)) return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<std::uint32_t> nbr_;
  std::set<std::uint64_t> dead_;
};

inline std::vector<Graph> loadCatalog(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open catalog " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t n;
    row >> n;
    std::vector<Edge> edges;
    std::string token;
    while (row >> token) {
      auto dash = token.find('-');
      edges.emplace_back(std::stoul(token.substr(0, dash)), std::stoul(token.substr(dash + 1)));
    }
    out.push_back(Graph::fromEdges(n, edges));
  }
  return out;
}

// Replaces every vertex v of `base` by a clique of size sizes[v]; cliques of
// adjacent base vertices are completely joined.
inline Graph blowUp(const Graph& base, const std::vector<std::size_t>& sizes) {
  std::vector<Vertex> first(base.vertexCount() + 1, 0);
  for (Vertex v = 0; v < base.vertexCount(); ++v) first[v + 1] = first[v] + sizes[v];
  std::vector<Edge> edges;
  for (Vertex v = 0; v < base.vertexCount(); ++v) {
    for (Vertex a = first[v]; a < first[v + 1]; ++a)
      for (Vertex b = a + 1; b < first[v + 1]; ++b) edges.emplace_back(a, b);
    for (Vertex u : base.neighbors(v))
      if (u > v)
        for (Vertex a = first[v]; a < first[v + 1]; ++a)
          for (Vertex b = first[u]; b < first[u + 1]; ++b) edges.emplace_back(a, b);
  }
  return Graph::fromEdges(first.back(), edges);
}

// Exact representation of any graph with one coordinate per non-edge {u,v}:
// u sits at 0, v at 2 and every other vertex spans [0,2].
inline BoxRep nonEdgeBoxRep(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::vector<Interval>> boxes(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      for (Vertex x = 0; x < n; ++x)
        boxes[x].push_back(x == u ? Interval{0, 0} : x == v ? Interval{2, 2} : Interval{0, 2});
    }
  if (n > 0 && boxes[0].empty())
    for (auto& b : boxes) b.push_back(Interval{0, 0});
  std::size_t d = n == 0 ? 1 : boxes[0].size();
  return BoxRep(d, std::move(boxes));
}

}  // namespace boxpow::testing
