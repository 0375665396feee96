#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "box_rep.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"

namespace boxpow {

// A pair whose adjacency disagrees between the expected graph and a
// representation. coordinateOverlap[c] tells whether coordinate c (or
// interval representation c) makes the two vertices meet.
struct PairWitness {
  Vertex u = 0, v = 0;
  bool expectedAdjacent = false;
  std::vector<bool> coordinateOverlap;
};

// Induced cycle of length >= 4, listed in cycle order.
struct CycleWitness {
  std::vector<Vertex> cycle;
};

// Asteroidal triple; paths[i] joins the two members other than triple[i]
// and avoids the closed neighborhood of triple[i].
struct TripleWitness {
  std::array<Vertex, 3> triple{};
  std::array<std::vector<Vertex>, 3> paths;
};

// Pair violating (u,v) in E(G) <=> d_T(f(u), f(v)) <= k.
struct DistanceWitness {
  Vertex u = 0, v = 0;
  std::size_t distance = 0;
  bool adjacent = false;
};

using Witness = std::variant<std::monostate, PairWitness, CycleWitness, TripleWitness, DistanceWitness>;

struct Verdict {
  bool ok = true;
  Witness witness;
  std::vector<Vertex> eliminationOrder;  // perfect elimination ordering from isChordal
  std::vector<bool> supergraph;          // per representation, from robertsCheck

  explicit operator bool() const { return ok; }

  static Verdict fail(Witness w) {
    Verdict v;
    v.ok = false;
    v.witness = std::move(w);
    return v;
  }
};

inline Graph intervalIntersectionGraph(const IntervalRep& rep) {
  const std::size_t n = rep.vertexCount();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rep.intervals[u].overlaps(rep.intervals[v])) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  return Graph::fromAdjacency(std::move(adj));
}

inline Graph boxIntersectionGraph(const BoxRep& rep) {
  const std::size_t n = rep.vertexCount();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rep.boxesMeet(u, v)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
  return Graph::fromAdjacency(std::move(adj));
}

/// ok iff the boxes of rep realize exactly the edges of g. The witness is the
/// lexicographically first mismatched pair.
inline Verdict verifyRepresentation(const Graph& g, const BoxRep& rep) {
  if (g.vertexCount() != rep.vertexCount())
    throw std::invalid_argument("graph has " + std::to_string(g.vertexCount()) +
                                " vertices but representation has " +
                                std::to_string(rep.vertexCount()));
  for (Vertex u = 0; u < g.vertexCount(); ++u)
    for (Vertex v = u + 1; v < g.vertexCount(); ++v) {
      bool expected = g.adjacent(u, v);
      if (expected == rep.boxesMeet(u, v)) continue;
      PairWitness w{u, v, expected, {}};
      for (std::size_t c = 0; c < rep.dimension(); ++c)
        w.coordinateOverlap.push_back(rep.box(u)[c].overlaps(rep.box(v)[c]));
      return Verdict::fail(std::move(w));
    }
  return {};
}

/// Maximum cardinality search; returns vertices in visiting order. Ties go to
/// the smallest index.
inline std::vector<Vertex> maximumCardinalitySearch(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    visited[best] = true;
    order.push_back(best);
    for (Vertex u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  return order;
}

/// Checks that each vertex's later neighbors form a clique, via the usual
/// "earliest later neighbor" test.
inline bool isPerfectEliminationOrdering(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertexCount();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) return false;
    pos[order[i]] = i;
  }
  for (Vertex v : order) {
    std::optional<Vertex> parent;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && (!parent || pos[u] < pos[*parent])) parent = u;
    if (!parent) continue;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && u != *parent && !g.adjacent(*parent, u)) return false;
  }
  return true;
}

namespace detail {

// Shortest path from `from` to `to` using only vertices with allowed[x].
inline std::vector<Vertex> shortestPath(const Graph& g, Vertex from, Vertex to,
                                        const std::vector<bool>& allowed) {
  const std::size_t n = g.vertexCount();
  std::vector<Vertex> prev(n, n);
  std::vector<Vertex> queue{from};
  prev[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    if (x == to) break;
    for (Vertex y : g.neighbors(x))
      if (allowed[y] && prev[y] == n) {
        prev[y] = x;
        queue.push_back(y);
      }
  }
  if (prev[to] == n) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Component labels of g - N[u]; vertices of N[u] get label -1.
inline std::vector<long> componentsAvoiding(const Graph& g, Vertex u) {
  const std::size_t n = g.vertexCount();
  std::vector<long> comp(n, -2);
  comp[u] = -1;
  for (Vertex x : g.neighbors(u)) comp[x] = -1;
  long next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -2) continue;
    comp[s] = next;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (comp[y] == -2) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

/// Finds an induced cycle of length >= 4, if any. For each vertex v and
/// each non-adjacent pair x, y of its neighbors, a shortest x-y path avoiding
/// the rest of N[v] closes a chordless cycle through v.
inline std::optional<CycleWitness> findChordlessCycle(const Graph& g) {
  const std::size_t n = g.vertexCount();
  for (Vertex v = 0; v < n; ++v) {
    auto nbrs = g.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        Vertex x = nbrs[a], y = nbrs[b];
        if (g.adjacent(x, y)) continue;
        std::vector<bool> allowed(n, true);
        allowed[v] = false;
        for (Vertex z : nbrs) allowed[z] = false;
        allowed[x] = allowed[y] = true;
        auto path = detail::shortestPath(g, x, y, allowed);
        if (path.empty()) continue;
        CycleWitness w;
        w.cycle.push_back(v);
        w.cycle.insert(w.cycle.end(), path.begin(), path.end());
        return w;
      }
  }
  return std::nullopt;
}

inline Verdict isChordal(const Graph& g) {
  auto visit = maximumCardinalitySearch(g);
  std::vector<Vertex> elimination(visit.rbegin(), visit.rend());
  if (isPerfectEliminationOrdering(g, elimination)) {
    Verdict ok;
    ok.eliminationOrder = std::move(elimination);
    return ok;
  }
  auto cycle = findChordlessCycle(g);
  if (!cycle) throw std::logic_error("MCS ordering rejected but no chordless cycle found");
  return Verdict::fail(std::move(*cycle));
}

/// Lexicographically first asteroidal triple, with its three avoiding paths.
inline std::optional<TripleWitness> findAsteroidalTriple(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::vector<long>> comp(n);
  for (Vertex u = 0; u < n; ++u) comp[u] = detail::componentsAvoiding(g, u);
  auto together = [&](Vertex avoid, Vertex x, Vertex y) {
    return comp[avoid][x] >= 0 && comp[avoid][x] == comp[avoid][y];
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        if (!together(a, b, c) || !together(b, a, c) || !together(c, a, b)) continue;
        TripleWitness w;
        w.triple = {a, b, c};
        for (std::size_t i = 0; i < 3; ++i) {
          Vertex avoid = w.triple[i];
          Vertex x = w.triple[(i + 1) % 3], y = w.triple[(i + 2) % 3];
          if (x > y) std::swap(x, y);
          std::vector<bool> allowed(n);
          for (Vertex z = 0; z < n; ++z) allowed[z] = comp[avoid][z] >= 0;
          w.paths[i] = detail::shortestPath(g, x, y, allowed);
        }
        return w;
      }
    }
  return std::nullopt;
}

/// Interval graph recognition: chordal and free of asteroidal triples.
inline Verdict isIntervalGraph(const Graph& g) {
  auto chordal = isChordal(g);
  if (!chordal) return chordal;
  if (auto triple = findAsteroidalTriple(g)) return Verdict::fail(std::move(*triple));
  return {};
}

/// ok iff g equals the intersection of the reps' interval graphs. The
/// supergraph field records, per rep, whether it contains every edge of g.
inline Verdict robertsCheck(const Graph& g, std::span<const IntervalRep> reps) {
  if (reps.empty()) throw std::invalid_argument("robertsCheck needs at least one representation");
  for (const auto& rep : reps)
    if (rep.vertexCount() != g.vertexCount())
      throw std::invalid_argument("representation covers " + std::to_string(rep.vertexCount()) +
                                  " vertices, graph has " + std::to_string(g.vertexCount()));
  std::vector<bool> supergraph;
  for (const auto& rep : reps) {
    bool covers = true;
    for (auto [u, v] : g.edges())
      if (!rep.intervals[u].overlaps(rep.intervals[v])) {
        covers = false;
        break;
      }
    supergraph.push_back(covers);
  }
  for (Vertex u = 0; u < g.vertexCount(); ++u)
    for (Vertex v = u + 1; v < g.vertexCount(); ++v) {
      PairWitness w{u, v, g.adjacent(u, v), {}};
      bool all = true;
      for (const auto& rep : reps) {
        w.coordinateOverlap.push_back(rep.intervals[u].overlaps(rep.intervals[v]));
        all = all && w.coordinateOverlap.back();
      }
      if (all != w.expectedAdjacent) {
        auto verdict = Verdict::fail(std::move(w));
        verdict.supergraph = std::move(supergraph);
        return verdict;
      }
    }
  Verdict ok;
  ok.supergraph = std::move(supergraph);
  return ok;
}

/// Checks that `embed` (graph vertex -> host vertex) makes `host` a k-Steiner
/// root of g: adjacency iff host distance <= k.
inline Verdict steinerCheck(const Graph& host, const Graph& g, const std::vector<Vertex>& embed,
                            std::size_t k) {
  if (embed.size() != g.vertexCount())
    throw std::invalid_argument("embedding size does not match the graph");
  auto rt = RootedTree::build(host);
  std::vector<bool> used(host.vertexCount(), false);
  for (Vertex x : embed) {
    if (x >= host.vertexCount()) throw std::invalid_argument("embedding target out of range");
    if (used[x]) throw std::invalid_argument("embedding is not injective at host vertex " + std::to_string(x));
    used[x] = true;
  }
  for (Vertex u = 0; u < g.vertexCount(); ++u)
    for (Vertex v = u + 1; v < g.vertexCount(); ++v) {
      std::size_t d = rt.distance(embed[u], embed[v]);
      bool adjacent = g.adjacent(u, v);
      if (adjacent != (d <= k)) return Verdict::fail(DistanceWitness{u, v, d, adjacent});
    }
  return {};
}

}  // namespace boxpow
