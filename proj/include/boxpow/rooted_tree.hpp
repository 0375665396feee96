#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace boxpow {

inline bool isTree(const Graph& g) {
  const std::size_t n = g.vertexCount();
  if (n == 0 || g.edgeCount() != n - 1) return false;
  auto dist = bfsDistances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

// A tree with a fixed root, parent links, depths and the depth-first leaf
// numbering l_1..l_m. Leaf spans are 1-based: a leaf l_i has span [i, i] and
// an internal vertex spans the min/max index of its leaf descendants.
//
// Children are visited in increasing vertex order, so the leaf numbering is
// fully determined by the tree and the root.
class RootedTree {
 public:
  /// Roots `tree` at `root`, or at its smallest-index non-leaf vertex. Trees
  /// with at most two vertices have no non-leaf vertex and default to root 0.
  static RootedTree build(const Graph& tree, std::optional<Vertex> root = std::nullopt) {
    if (!isTree(tree)) throw std::invalid_argument("input graph is not a tree");
    const std::size_t n = tree.vertexCount();
    Vertex r = 0;
    if (root) {
      if (*root >= n) throw std::invalid_argument("root " + std::to_string(*root) + " out of range");
      if (n >= 3 && tree.degree(*root) <= 1)
        throw std::invalid_argument("root " + std::to_string(*root) + " is a leaf");
      r = *root;
    } else if (n >= 3) {
      while (tree.degree(r) <= 1) ++r;
    }

    std::vector<Vertex> parent(n);
    parent[r] = r;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{r};
    seen[r] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : tree.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = true;
        parent[u] = v;
        stack.push_back(u);
      }
    }
    return RootedTree(std::move(parent), r);
  }

  /// From a parent array with parent[root] == root.
  static RootedTree fromParents(std::vector<Vertex> parent, Vertex root) {
    const std::size_t n = parent.size();
    if (n == 0) throw std::invalid_argument("empty parent array");
    if (root >= n || parent[root] != root)
      throw std::invalid_argument("parent[root] must equal root");
    for (Vertex v = 0; v < n; ++v) {
      if (parent[v] >= n) throw std::invalid_argument("parent index out of range at " + std::to_string(v));
      if (v != root && parent[v] == v)
        throw std::invalid_argument("vertex " + std::to_string(v) + " is a second root");
    }
    // every walk must reach the root within n steps
    for (Vertex v = 0; v < n; ++v) {
      Vertex x = v;
      std::size_t steps = 0;
      while (x != root && steps <= n) x = parent[x], ++steps;
      if (x != root) throw std::invalid_argument("parent links contain a cycle");
    }
    RootedTree rt(std::move(parent), root);
    if (n >= 3 && rt.children(root).size() <= 1)
      throw std::invalid_argument("root " + std::to_string(root) + " is a leaf");
    return rt;
  }

  std::size_t vertexCount() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_.at(v); }
  const std::vector<Vertex>& parents() const { return parent_; }
  const std::vector<Vertex>& children(Vertex v) const { return children_.at(v); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }
  std::size_t height() const { return *std::max_element(depth_.begin(), depth_.end()); }
  bool isLeaf(Vertex v) const { return children_.at(v).empty(); }
  const std::vector<Vertex>& leafOrder() const { return leafOrder_; }
  std::size_t leafCount() const { return leafOrder_.size(); }
  std::size_t spanS(Vertex v) const { return spanS_.at(v); }
  std::size_t spanT(Vertex v) const { return spanT_.at(v); }

  /// p^i(u); the walk saturates at the root.
  Vertex ancestorAt(Vertex u, std::size_t i) const {
    Vertex x = u;
    for (std::size_t step = 0; step < i && x != root_; ++step) x = parent_.at(x);
    return x;
  }

  /// True iff u lies on the root-to-v path (u is an ancestor of v, or u == v).
  bool isAncestor(Vertex u, Vertex v) const {
    if (depth(u) > depth(v)) return false;
    return ancestorAt(v, depth(v) - depth(u)) == u;
  }

  Vertex lca(Vertex u, Vertex v) const {
    if (depth(u) < depth(v)) std::swap(u, v);
    u = ancestorAt(u, depth(u) - depth(v));
    while (u != v) u = parent_[u], v = parent_[v];
    return u;
  }

  std::size_t distance(Vertex u, Vertex v) const {
    Vertex x = lca(u, v);
    return (depth(u) - depth(x)) + (depth(v) - depth(x));
  }

  Graph toGraph(std::vector<std::string> labels = {}) const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < vertexCount(); ++v)
      if (v != root_) edges.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
    return Graph::fromEdges(vertexCount(), edges, std::move(labels));
  }

 private:
  RootedTree(std::vector<Vertex> parent, Vertex root) : parent_(std::move(parent)), root_(root) {
    const std::size_t n = parent_.size();
    children_.resize(n);
    for (Vertex v = 0; v < n; ++v)
      if (v != root_) children_[parent_[v]].push_back(v);  // ascending by construction

    depth_.assign(n, 0);
    spanS_.assign(n, 0);
    spanT_.assign(n, 0);
    std::vector<Vertex> preorder;
    preorder.reserve(n);
    std::vector<Vertex> stack{root_};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      if (children_[v].empty()) {
        leafOrder_.push_back(v);
        spanS_[v] = spanT_[v] = leafOrder_.size();
      }
      for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) {
        depth_[*it] = depth_[v] + 1;
        stack.push_back(*it);
      }
    }
    for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
      Vertex v = *it;
      for (Vertex c : children_[v]) {
        spanS_[v] = spanS_[v] == 0 ? spanS_[c] : std::min(spanS_[v], spanS_[c]);
        spanT_[v] = std::max(spanT_[v], spanT_[c]);
      }
    }
  }

  std::vector<Vertex> parent_;
  Vertex root_ = 0;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> leafOrder_;
  std::vector<std::size_t> spanS_, spanT_;
};

}  // namespace boxpow
