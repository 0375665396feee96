#include <gtest/gtest.h>

#include "boxpow/gadgets.hpp"
#include "boxpow/verify.hpp"
#include "support.hpp"

namespace boxpow {
namespace {

TEST(RecurrenceTest, PublishedBaseValues) {
  EXPECT_EQ(wValue(1), 1);
  EXPECT_EQ(wValue(2), 3);
}

TEST(RecurrenceTest, HandEvaluatedValues) {
  EXPECT_EQ(wValue(3), 6);
  EXPECT_EQ(wValue(4), 32);
  EXPECT_EQ(fValue(1), 1);
  EXPECT_EQ(fValue(2), 9);
  EXPECT_EQ(fValue(3), 31);
  EXPECT_THROW(wValue(0), std::invalid_argument);
  EXPECT_THROW(fValue(0), std::invalid_argument);
}

TEST(RecurrenceTest, MatchesIndependentEvaluation) {
  for (unsigned i = 1; i <= 12; ++i) {
    EXPECT_EQ(wValue(i), testing::wReference(i)) << "i=" << i;
    EXPECT_EQ(fValue(i), testing::fReference(i)) << "k=" << i;
  }
}

TEST(RecurrenceTest, LargeArgumentsStayExact) {
  // w(i) outgrows 64 bits; check the recurrence step in big integers
  BigInt w40 = wValue(40), w38 = wValue(38);
  EXPECT_GT(w40, BigInt(std::numeric_limits<std::uint64_t>::max()));
  EXPECT_EQ(w40, BigInt(2 * 39 + 1) + (BigInt(39 * 38 / 2) * 4 * (w38 - 1) + 1));
  EXPECT_THROW(buildSk(40), std::overflow_error);
}

TEST(SpiderTest, Shapes) {
  Graph edge = buildSpider({1, 1});
  EXPECT_EQ(edge.vertexCount(), 2u);
  EXPECT_EQ(edge.label(1), "v_{1,1}");

  Graph s = buildSpider({3, 2});
  EXPECT_EQ(s.vertexCount(), 7u);
  EXPECT_EQ(s.degree(0), 3u);
  EXPECT_EQ(s.label(0), "v_0");

  Graph doubleLeg = buildSpider({2, 3});
  EXPECT_EQ(doubleLeg.vertexCount(), 7u);
  EXPECT_TRUE(graphsEqual(doubleLeg, testing::edgesOf(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}})).equal);
  EXPECT_THROW(buildSpider({0, 2}), std::invalid_argument);
}

TEST(SpiderTest, GadgetSizes) {
  EXPECT_EQ(buildSk(2).vertexCount(), 7u);
  EXPECT_EQ(buildTk(2).vertexCount(), 28u);
  EXPECT_EQ(buildSk(3).vertexCount(), 19u);
  EXPECT_EQ(buildTk(2).degree(0), 9u);
  EXPECT_EQ(buildSk(3).degree(0), 6u);
}

TEST(SkPowerProperty, StructuralFacts) {
  for (std::size_t k = 2; k <= 4; ++k) {
    SpiderSpec spec = skSpec(k);
    Graph sq = power(buildSk(k), k);
    EXPECT_EQ(sq.degree(0), sq.vertexCount() - 1);
    for (std::size_t a = 1; a <= spec.legCount; ++a)
      for (std::size_t b = 1; b <= spec.legCount; ++b) {
        if (a == b) continue;
        EXPECT_TRUE(sq.adjacent(spiderVertex(spec, 1, a), spiderVertex(spec, 1, b)));
        EXPECT_FALSE(sq.adjacent(spiderVertex(spec, k, a), spiderVertex(spec, 1, b)));
      }
  }
}

TEST(TkPowerProperty, CenterSeesExactlyTheFirstKLayers) {
  for (std::size_t k = 1; k <= 3; ++k) {
    SpiderSpec spec = tkSpec(k);
    Graph sq = power(buildTk(k), k);
    for (std::size_t leg = 1; leg <= spec.legCount; ++leg) {
      for (std::size_t layer = 1; layer <= k; ++layer)
        EXPECT_TRUE(sq.adjacent(0, spiderVertex(spec, layer, leg)));
      EXPECT_FALSE(sq.adjacent(0, spiderVertex(spec, k + 1, leg)));
    }
  }
}

TEST(TkPowerProperty, ContainsSkPowerOnAnyWkLegs) {
  for (std::size_t k = 1; k <= 3; ++k) {
    SpiderSpec sk = skSpec(k), tk = tkSpec(k);
    Graph tkPower = power(buildTk(k), k);
    Graph skPower = power(buildSk(k), k);
    // first w(k) legs, and the last w(k) legs
    for (std::size_t offset : {std::size_t{0}, tk.legCount - sk.legCount}) {
      std::vector<Vertex> subset(skPower.vertexCount());
      subset[0] = 0;
      for (std::size_t leg = 1; leg <= sk.legCount; ++leg)
        for (std::size_t layer = 1; layer <= k; ++layer)
          subset[spiderVertex(sk, layer, leg)] = spiderVertex(tk, layer, leg + offset);
      auto [induced, _] = inducedSubgraph(tkPower, subset);
      EXPECT_TRUE(graphsEqual(induced, skPower).equal) << "k=" << k << " offset=" << offset;
    }
  }
}

TEST(TightInstanceTest, KEqualsThreeIsAPath) {
  auto inst = buildTightLeafPowerInstance(3);
  EXPECT_TRUE(graphsEqual(inst.graph, testing::pathGraph(3)).equal);
  EXPECT_EQ(inst.leafRoot.tree().vertexCount(), 6u);
  EXPECT_EQ(inst.leafRoot.k(), 3u);
  EXPECT_TRUE(graphsEqual(buildGraphFromLeafRoot(inst.leafRoot), inst.graph).equal);
}

TEST(TightInstanceTest, KEqualsFour) {
  auto inst = buildTightLeafPowerInstance(4);
  EXPECT_EQ(inst.graph.vertexCount(), 28u);
  EXPECT_TRUE(graphsEqual(buildGraphFromLeafRoot(inst.leafRoot), inst.graph).equal);
  std::vector<Vertex> identity(28);
  for (Vertex v = 0; v < 28; ++v) identity[v] = v;
  EXPECT_TRUE(steinerCheck(inst.steinerRoot, inst.graph, identity, 2).ok);
  auto [cc, mapping] = criticalCliqueGraph(inst.graph);
  EXPECT_EQ(cc.vertexCount(), inst.graph.vertexCount());
  EXPECT_THROW(buildTightLeafPowerInstance(2), std::invalid_argument);
}

}  // namespace
}  // namespace boxpow
