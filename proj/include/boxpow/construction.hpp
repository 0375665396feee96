#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "box_rep.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"

namespace boxpow {

/// Layer interval graph I_i of the k-th tree power, 0 <= i < k.
///
/// Vertex u gets [s(p^i(u)), t(p^(k-1-i)(u))]. Both ancestors lie on the same
/// root path, so one is an ancestor of the other and the leaf-span nesting
/// makes the interval non-empty.
///
/// Every pair at tree distance <= k overlaps here; a pair at distance > k whose
/// least common ancestor is at height d2 >= 1 above v (and d1 >= 1 above u) is
/// separated in layer min(d2, k) - 1 for a suitable orientation of the pair.
inline IntervalRep buildLayerRep(const RootedTree& rt, std::size_t k, std::size_t i) {
  if (k == 0) throw std::invalid_argument("layer representation requires k >= 1");
  if (i >= k)
    throw std::invalid_argument("layer index " + std::to_string(i) + " out of range for k=" +
                                std::to_string(k));
  if (rt.vertexCount() < 3)
    throw std::invalid_argument("layer representation requires a tree with at least 3 vertices");
  IntervalRep rep;
  rep.tag = RepTag::ofLayer(i);
  rep.intervals.reserve(rt.vertexCount());
  for (Vertex u = 0; u < rt.vertexCount(); ++u) {
    auto lo = rt.spanS(rt.ancestorAt(u, i));
    auto hi = rt.spanT(rt.ancestorAt(u, k - 1 - i));
    rep.intervals.emplace_back(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi));
  }
  return rep;
}

/// Depth interval graph I': vertex u gets [depth(u), depth(u) + k]. It
/// separates exactly the pairs whose depths differ by more than k, which
/// covers ancestor/descendant pairs that are too far apart.
inline IntervalRep buildDepthRep(const RootedTree& rt, std::size_t k) {
  if (k == 0) throw std::invalid_argument("depth representation requires k >= 1");
  IntervalRep rep;
  rep.tag = RepTag::depth();
  rep.intervals.reserve(rt.vertexCount());
  for (Vertex u = 0; u < rt.vertexCount(); ++u) {
    auto d = static_cast<std::int64_t>(rt.depth(u));
    rep.intervals.emplace_back(d, d + static_cast<std::int64_t>(k));
  }
  return rep;
}

/// (k+1)-box representation of T^k: coordinate 0 is the depth graph,
/// coordinate 1+i is layer graph i. Trees with at most two vertices have a
/// complete k-th power and get a single coordinate of identical points.
inline BoxRep buildBoxRep(const RootedTree& rt, std::size_t k) {
  if (k == 0) throw std::invalid_argument("box representation requires k >= 1");
  if (rt.vertexCount() <= 2)
    return BoxRep(1, std::vector<std::vector<Interval>>(rt.vertexCount(), {Interval{0, 0}}));
  std::vector<IntervalRep> coordinates;
  coordinates.reserve(k + 1);
  coordinates.push_back(buildDepthRep(rt, k));
  for (std::size_t i = 0; i < k; ++i) coordinates.push_back(buildLayerRep(rt, k, i));
  return BoxRep::fromCoordinates(coordinates);
}

inline BoxRep buildBoxRep(const Graph& tree, std::size_t k,
                          std::optional<Vertex> root = std::nullopt) {
  if (k == 0) throw std::invalid_argument("box representation requires k >= 1");
  return buildBoxRep(RootedTree::build(tree, root), k);
}

/// Copies each critical clique's box to all of its members.
inline BoxRep liftRepresentation(const BoxRep& rep, const CliqueMapping& mapping) {
  if (rep.vertexCount() != mapping.representatives.size())
    throw std::invalid_argument("representation has " + std::to_string(rep.vertexCount()) +
                                " boxes but the mapping has " +
                                std::to_string(mapping.representatives.size()) + " cliques");
  std::vector<std::vector<Interval>> boxes;
  boxes.reserve(mapping.classOf.size());
  for (std::size_t c : mapping.classOf) {
    if (c >= rep.vertexCount())
      throw std::invalid_argument("mapping refers to clique " + std::to_string(c) +
                                  " outside the representation");
    boxes.push_back(rep.box(c));
  }
  return BoxRep(rep.dimension(), std::move(boxes));
}

// A k-leaf root: a tree whose leaves are in bijection with the vertices of a
// target graph G, which has one vertex per leaf. Leaves are vertices of degree
// at most one.
class LeafRoot {
 public:
  /// leafOf[v] is the tree leaf carrying graph vertex v.
  LeafRoot(Graph tree, std::size_t k, std::vector<Vertex> leafOf)
      : tree_(std::move(tree)), k_(k), leafOf_(std::move(leafOf)) {
    if (k_ < 2) throw std::invalid_argument("leaf root requires k >= 2");
    if (!isTree(tree_)) throw std::invalid_argument("leaf root is not a tree");
    std::vector<bool> used(tree_.vertexCount(), false);
    std::size_t leaves = 0;
    for (Vertex x = 0; x < tree_.vertexCount(); ++x)
      if (tree_.degree(x) <= 1) ++leaves;
    for (Vertex v = 0; v < leafOf_.size(); ++v) {
      Vertex x = leafOf_[v];
      if (x >= tree_.vertexCount() || tree_.degree(x) > 1)
        throw std::invalid_argument("graph vertex " + std::to_string(v) +
                                    " is not mapped to a leaf");
      if (used[x]) throw std::invalid_argument("leaf " + std::to_string(x) + " mapped twice");
      used[x] = true;
    }
    if (leafOf_.size() != leaves)
      throw std::invalid_argument("leaf root maps " + std::to_string(leafOf_.size()) + " of " +
                                  std::to_string(leaves) + " leaves");
  }

  static LeafRoot fromLeafToVertex(Graph tree, std::size_t k,
                                   const std::map<Vertex, Vertex>& leafToVertex) {
    constexpr auto unset = static_cast<Vertex>(-1);
    std::vector<Vertex> leafOf(leafToVertex.size(), unset);
    for (auto [leaf, v] : leafToVertex) {
      if (v >= leafOf.size() || leafOf[v] != unset)
        throw std::invalid_argument("leaf targets must be exactly 0..m-1");
      leafOf[v] = leaf;
    }
    return LeafRoot(std::move(tree), k, std::move(leafOf));
  }

  const Graph& tree() const { return tree_; }
  std::size_t k() const { return k_; }
  std::size_t graphVertexCount() const { return leafOf_.size(); }
  Vertex leafOf(Vertex v) const { return leafOf_.at(v); }
  const std::vector<Vertex>& leaves() const { return leafOf_; }

  std::map<Vertex, Vertex> leafToVertex() const {
    std::map<Vertex, Vertex> out;
    for (Vertex v = 0; v < leafOf_.size(); ++v) out.emplace(leafOf_[v], v);
    return out;
  }

 private:
  Graph tree_;
  std::size_t k_;
  std::vector<Vertex> leafOf_;
};

/// The k-leaf power: u ~ v iff their leaves are within tree distance k.
inline Graph buildGraphFromLeafRoot(const LeafRoot& lr) {
  const std::size_t m = lr.graphVertexCount();
  const auto& tree = lr.tree();
  std::vector<std::vector<Vertex>> adj(m);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < m; ++v) {
    auto dist = bfsDistances(tree, lr.leafOf(v), lr.k());
    for (Vertex u = 0; u < m; ++u)
      if (u != v && dist[lr.leafOf(u)]) adj[v].push_back(u);
    if (tree.hasLabels()) labels.push_back(tree.label(lr.leafOf(v)));
  }
  return Graph::fromAdjacency(std::move(adj), std::move(labels));
}

/// (k-1)-box representation of the k-leaf power of `lr`.
///
/// Each graph vertex is anchored at the neighbor of its leaf. After removing
/// all leaves, two distinct leaves are at distance d + 2 where d is the
/// distance of their anchors in the pruned tree, so adjacency in G is
/// "anchors within k-2". The pruned tree's (k-2)-th power representation is
/// pulled back through the anchors; vertices sharing an anchor get identical
/// boxes. For k = 2 the graph is a disjoint union of cliques, one per anchor,
/// laid out as distinct points on a line.
inline BoxRep buildLeafPowerBoxRep(const LeafRoot& lr) {
  const std::size_t k = lr.k();
  if (k < 2) throw std::invalid_argument("leaf power representation requires k >= 2");
  const auto& tree = lr.tree();
  const std::size_t m = lr.graphVertexCount();
  const std::size_t dimension = k - 1;

  // one or two tree vertices: the leaf power is complete
  if (tree.vertexCount() <= 2)
    return BoxRep(dimension, std::vector<std::vector<Interval>>(m, std::vector<Interval>(dimension)));

  std::vector<Vertex> anchor(m);
  for (Vertex v = 0; v < m; ++v) anchor[v] = tree.neighbors(lr.leafOf(v)).front();

  if (k == 2) {
    std::map<Vertex, std::int64_t> position;
    for (Vertex a : anchor) position.try_emplace(a, 0);
    std::int64_t next = 0;
    for (auto& [a, p] : position) p = next++;
    std::vector<std::vector<Interval>> boxes;
    for (Vertex a : anchor) boxes.push_back({Interval{position[a], position[a]}});
    return BoxRep(1, std::move(boxes));
  }

  std::vector<Vertex> internal;
  for (Vertex x = 0; x < tree.vertexCount(); ++x)
    if (tree.degree(x) >= 2) internal.push_back(x);
  auto [pruned, toTree] = inducedSubgraph(tree, internal);
  std::vector<Vertex> prunedIndex(tree.vertexCount());
  for (Vertex i = 0; i < toTree.size(); ++i) prunedIndex[toTree[i]] = i;

  BoxRep prunedRep = buildBoxRep(pruned, k - 2).paddedTo(dimension);
  std::vector<std::vector<Interval>> boxes;
  boxes.reserve(m);
  for (Vertex v = 0; v < m; ++v) boxes.push_back(prunedRep.box(prunedIndex[anchor[v]]));
  return BoxRep(dimension, std::move(boxes));
}

}  // namespace boxpow
