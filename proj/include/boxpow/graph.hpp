#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace boxpow {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted
// and duplicate-free; labels are display-only and never affect equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  static Graph fromEdges(std::size_t n, std::span<const Edge> edges,
                         std::vector<std::string> labels = {}) {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return fromAdjacency(std::move(adj), std::move(labels));
  }

  // Accepts unsorted lists with duplicates; rejects loops and asymmetric input.
  static Graph fromAdjacency(std::vector<std::vector<Vertex>> adj,
                             std::vector<std::string> labels = {}) {
    const std::size_t n = adj.size();
    for (Vertex v = 0; v < n; ++v) {
      auto& list = adj[v];
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (!list.empty() && list.back() >= n)
        throw std::invalid_argument("neighbor index out of range at vertex " + std::to_string(v));
      if (std::binary_search(list.begin(), list.end(), v))
        throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    }
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : adj[v])
        if (!std::binary_search(adj[u].begin(), adj[u].end(), v))
          throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                      " and " + std::to_string(u));
    Graph g;
    g.adj_ = std::move(adj);
    g.setLabels(std::move(labels));
    return g;
  }

  static Graph complete(std::size_t n) {
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u = 0; u < n; ++u)
        if (u != v) adj[v].push_back(u);
    Graph g;
    g.adj_ = std::move(adj);
    return g;
  }

  std::size_t vertexCount() const { return adj_.size(); }

  std::size_t edgeCount() const {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  // Edges as (u,v) with u<v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edgeCount());
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool hasLabels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const { return hasLabels() ? labels_.at(v) : std::to_string(v); }

  void setLabels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != adj_.size())
      throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                  " does not match vertex count " + std::to_string(adj_.size()));
    labels_ = std::move(labels);
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

// Vertex grouping produced by criticalCliqueGraph.
struct CliqueMapping {
  std::vector<std::size_t> classOf;               // original vertex -> clique index
  std::vector<std::vector<Vertex>> representatives;  // clique index -> original vertices
};

struct GraphDiff {
  bool equal = true;
  std::optional<Edge> witness;  // first pair (u<v) adjacent in exactly one graph
};

/// Distances from `source` by breadth-first search, truncated at `limit` hops.
/// Unreached vertices (or those beyond the limit) get std::nullopt.
inline std::vector<std::optional<std::size_t>> bfsDistances(
    const Graph& g, Vertex source, std::optional<std::size_t> limit = std::nullopt) {
  std::vector<std::optional<std::size_t>> dist(g.vertexCount());
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    if (limit && *dist[v] == *limit) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u]) continue;
      dist[u] = *dist[v] + 1;
      frontier.push(u);
    }
  }
  return dist;
}

/// k-th power: u~v iff 1 <= d(u,v) <= k, with d from per-vertex BFS.
/// Unreachable pairs are never adjacent. Labels carry over.
inline Graph power(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("graph power requires k >= 1");
  std::vector<std::vector<Vertex>> adj(g.vertexCount());
  for (Vertex v = 0; v < g.vertexCount(); ++v) {
    auto dist = bfsDistances(g, v, k);
    for (Vertex u = 0; u < g.vertexCount(); ++u)
      if (u != v && dist[u]) adj[v].push_back(u);
  }
  return Graph::fromAdjacency(std::move(adj), g.labels());
}

/// Edge-set intersection of graphs on a common vertex set. Labels come from the first graph.
inline Graph intersect(std::span<const Graph> graphs) {
  if (graphs.empty()) throw std::invalid_argument("intersect requires at least one graph");
  const std::size_t n = graphs.front().vertexCount();
  for (const auto& g : graphs)
    if (g.vertexCount() != n)
      throw std::invalid_argument("intersect: vertex counts differ (" + std::to_string(n) +
                                  " vs " + std::to_string(g.vertexCount()) + ")");
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    auto first = graphs.front().neighbors(v);
    std::vector<Vertex> acc(first.begin(), first.end());
    for (const auto& g : graphs.subspan(1)) {
      auto other = g.neighbors(v);
      std::vector<Vertex> next;
      std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                            std::back_inserter(next));
      acc = std::move(next);
    }
    adj[v] = std::move(acc);
  }
  return Graph::fromAdjacency(std::move(adj), graphs.front().labels());
}

inline Graph intersect(std::initializer_list<Graph> graphs) {
  std::vector<Graph> list(graphs);
  return intersect(std::span<const Graph>(list));
}

inline std::vector<Vertex> closedNeighborhood(const Graph& g, Vertex v) {
  auto open = g.neighbors(v);
  std::vector<Vertex> closed(open.begin(), open.end());
  closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
  return closed;
}

/// Quotient by equal closed neighborhoods. Clique indices follow the smallest
/// member; two cliques are adjacent iff their union is a clique in g.
inline std::pair<Graph, CliqueMapping> criticalCliqueGraph(const Graph& g) {
  const std::size_t n = g.vertexCount();
  CliqueMapping mapping;
  mapping.classOf.resize(n);
  std::map<std::vector<Vertex>, std::size_t> classByNeighborhood;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] =
        classByNeighborhood.try_emplace(closedNeighborhood(g, v), mapping.representatives.size());
    if (inserted) mapping.representatives.emplace_back();
    mapping.classOf[v] = it->second;
    mapping.representatives[it->second].push_back(v);
  }
  const std::size_t classes = mapping.representatives.size();
  std::vector<std::vector<Vertex>> adj(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    // members of a class are twins, so one representative decides adjacency
    for (Vertex u : g.neighbors(mapping.representatives[c].front())) {
      std::size_t d = mapping.classOf[u];
      if (d != c) adj[c].push_back(d);
    }
  }
  std::vector<std::string> labels;
  if (g.hasLabels())
    for (const auto& members : mapping.representatives) labels.push_back(g.label(members.front()));
  return {Graph::fromAdjacency(std::move(adj), std::move(labels)), std::move(mapping)};
}

/// Subgraph induced by `subset`; vertex i of the result is subset[i].
inline std::pair<Graph, std::vector<Vertex>> inducedSubgraph(const Graph& g,
                                                             std::span<const Vertex> subset) {
  constexpr auto absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(g.vertexCount(), absent);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex v = subset[i];
    if (v >= g.vertexCount())
      throw std::invalid_argument("inducedSubgraph: vertex " + std::to_string(v) + " out of range");
    if (position[v] != absent)
      throw std::invalid_argument("inducedSubgraph: vertex " + std::to_string(v) + " repeated");
    position[v] = i;
  }
  std::vector<std::vector<Vertex>> adj(subset.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (Vertex u : g.neighbors(subset[i]))
      if (position[u] != absent) adj[i].push_back(position[u]);
    if (g.hasLabels()) labels.push_back(g.label(subset[i]));
  }
  return {Graph::fromAdjacency(std::move(adj), std::move(labels)),
          std::vector<Vertex>(subset.begin(), subset.end())};
}

inline GraphDiff graphsEqual(const Graph& a, const Graph& b) {
  if (a.vertexCount() != b.vertexCount()) return {false, std::nullopt};
  for (Vertex u = 0; u < a.vertexCount(); ++u) {
    auto na = a.neighbors(u);
    auto nb = b.neighbors(u);
    if (std::equal(na.begin(), na.end(), nb.begin(), nb.end())) continue;
    // first v>u where the sorted lists disagree
    std::vector<Vertex> diff;
    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(diff));
    auto it = std::upper_bound(diff.begin(), diff.end(), u);
    if (it != diff.end()) return {false, Edge{u, *it}};
  }
  return {};
}

}  // namespace boxpow
