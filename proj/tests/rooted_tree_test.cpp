#include <gtest/gtest.h>

#include "boxpow/gadgets.hpp"
#include "boxpow/random.hpp"
#include "boxpow/rooted_tree.hpp"
#include "support.hpp"

namespace boxpow {
namespace {

TEST(RootedTreeTest, PathRootedAtMiddle) {
  auto rt = RootedTree::build(testing::pathGraph(3), 1);
  EXPECT_EQ(rt.leafOrder(), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(rt.spanS(0), 1u);
  EXPECT_EQ(rt.spanT(0), 1u);
  EXPECT_EQ(rt.spanS(2), 2u);
  EXPECT_EQ(rt.spanT(2), 2u);
  EXPECT_EQ(rt.spanS(1), 1u);
  EXPECT_EQ(rt.spanT(1), 2u);
  EXPECT_EQ(rt.depth(1), 0u);
  EXPECT_EQ(rt.depth(0), 1u);
}

TEST(RootedTreeTest, AutoRootIsSmallestNonLeaf) {
  auto rt = RootedTree::build(testing::pathGraph(3));
  EXPECT_EQ(rt.root(), 1u);
}

TEST(RootedTreeTest, StarLeavesInIndexOrder) {
  auto rt = RootedTree::build(testing::starGraph(3), 0);
  EXPECT_EQ(rt.leafOrder(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(rt.spanS(0), 1u);
  EXPECT_EQ(rt.spanT(0), 3u);
}

TEST(RootedTreeTest, DegenerateTrees) {
  auto edge = RootedTree::build(testing::pathGraph(2));
  EXPECT_EQ(edge.root(), 0u);
  EXPECT_EQ(edge.leafOrder(), (std::vector<Vertex>{1}));
  auto single = RootedTree::build(Graph(1));
  EXPECT_EQ(single.leafOrder(), (std::vector<Vertex>{0}));
}

TEST(RootedTreeTest, RejectsNonTreesAndLeafRoots) {
  EXPECT_THROW(RootedTree::build(testing::cycleGraph(4)), std::invalid_argument);
  EXPECT_THROW(RootedTree::build(testing::edgesOf(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  EXPECT_THROW(RootedTree::build(Graph(0)), std::invalid_argument);
  EXPECT_THROW(RootedTree::build(testing::pathGraph(3), 0), std::invalid_argument);
  EXPECT_THROW(RootedTree::fromParents({1, 0, 1}, 1), std::invalid_argument);   // parent[root] != root
  EXPECT_THROW(RootedTree::fromParents({1, 1, 3, 2}, 1), std::invalid_argument);  // 2-3 cycle / second root
  EXPECT_THROW(RootedTree::fromParents({0, 0, 1}, 0), std::invalid_argument);   // root is a leaf
}

TEST(RootedTreeTest, FromParentsMatchesBuild) {
  auto built = RootedTree::build(buildSk(2));
  auto again = RootedTree::fromParents(built.parents(), built.root());
  EXPECT_EQ(again.leafOrder(), built.leafOrder());
  EXPECT_TRUE(graphsEqual(again.toGraph(), buildSk(2)).equal);
}

TEST(AncestorTest, Examples) {
  auto rt = RootedTree::build(testing::pathGraph(3), 1);
  EXPECT_EQ(rt.ancestorAt(0, 0), 0u);
  EXPECT_EQ(rt.ancestorAt(1, 5), 1u);
  EXPECT_EQ(rt.ancestorAt(0, 1), 1u);
  EXPECT_EQ(rt.ancestorAt(0, 2), 1u);
}

TEST(DistanceTest, Examples) {
  auto rt = RootedTree::build(testing::pathGraph(3), 1);
  EXPECT_EQ(rt.distance(0, 0), 0u);
  EXPECT_EQ(rt.distance(0, 2), 2u);
  EXPECT_EQ(rt.lca(0, 2), 1u);

  SpiderSpec spec{3, 2};
  auto spider = RootedTree::build(buildSpider(spec));
  EXPECT_EQ(spider.distance(spiderVertex(spec, 2, 1), spiderVertex(spec, 2, 2)), 4u);
}

// Leaf-span lemmas and the tree bookkeeping, over random trees and roots.
TEST(RootedTreeProperty, SpansNestDisjointAndContiguous) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 3 + trial % 60;
    Graph t = testing::randomAttachmentTree(n, rng);
    std::vector<Vertex> internal;
    for (Vertex v = 0; v < n; ++v)
      if (t.degree(v) >= 2) internal.push_back(v);
    auto rt = RootedTree::build(t, internal[rng() % internal.size()]);
    auto dist = testing::floydWarshall(t);

    for (Vertex u = 0; u < n; ++u) {
      // contiguity: leaves with index in [s(u), t(u)] are exactly u's descendants
      for (std::size_t i = 1; i <= rt.leafCount(); ++i) {
        bool inSpan = rt.spanS(u) <= i && i <= rt.spanT(u);
        ASSERT_EQ(inSpan, rt.isAncestor(u, rt.leafOrder()[i - 1]));
      }
      ASSERT_EQ(rt.depth(u), dist[rt.root()][u]);
      for (std::size_t i = 0; i < 6; ++i)
        ASSERT_EQ(rt.ancestorAt(u, i + 1), rt.ancestorAt(rt.ancestorAt(u, i), 1));
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(rt.distance(u, v), dist[u][v]);
        if (rt.isAncestor(u, v)) {
          ASSERT_LE(rt.spanS(u), rt.spanS(v));
          ASSERT_LE(rt.spanS(v), rt.spanT(v));
          ASSERT_LE(rt.spanT(v), rt.spanT(u));
        } else if (!rt.isAncestor(v, u)) {
          bool before = rt.spanT(u) < rt.spanS(v);
          bool after = rt.spanT(v) < rt.spanS(u);
          ASSERT_TRUE(before != after);
        }
      }
    }
  }
}

}  // namespace
}  // namespace boxpow
