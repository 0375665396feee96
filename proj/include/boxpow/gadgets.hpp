#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "construction.hpp"
#include "graph.hpp"

namespace boxpow {

using BigInt = boost::multiprecision::cpp_int;

// Leg-count recurrence for the S_k gadget:
//   w(1) = 1, w(2) = 3,
//   w(i) = 2(i-1) + 1 + [C(i-1, 2) * 4 * (w(i-2) - 1) + 1]   for i >= 3.
inline BigInt wValue(std::size_t i) {
  if (i == 0) throw std::invalid_argument("w is defined for i >= 1");
  std::vector<BigInt> w{0, 1, 3};
  for (std::size_t j = 3; j <= i; ++j) {
    BigInt pairs = BigInt(j - 1) * (j - 2) / 2;
    w.push_back(BigInt(2 * (j - 1) + 1) + (pairs * 4 * (w[j - 2] - 1) + 1));
  }
  return w[i];
}

// f(k) = 2k (w(k) - 1) + 1, the leg count of T_k.
inline BigInt fValue(std::size_t k) {
  if (k == 0) throw std::invalid_argument("f is defined for k >= 1");
  return BigInt(2 * k) * (wValue(k) - 1) + 1;
}

struct SpiderSpec {
  std::size_t legCount = 1;
  std::size_t legLength = 1;
};

inline std::string spiderLabel(std::size_t layer, std::size_t leg) {
  return "v_{" + std::to_string(layer) + "," + std::to_string(leg) + "}";
}

/// Index of v_{layer,leg} (both 1-based) in buildSpider's layout.
inline Vertex spiderVertex(const SpiderSpec& spec, std::size_t layer, std::size_t leg) {
  return 1 + (leg - 1) * spec.legLength + (layer - 1);
}

/// Center v_0 = vertex 0; leg j (1-based) is the block of indices
/// 1 + (j-1)*legLength ... j*legLength, ordered outward from the center.
inline Graph buildSpider(const SpiderSpec& spec) {
  if (spec.legCount == 0 || spec.legLength == 0)
    throw std::invalid_argument("spider needs at least one leg of length at least one");
  const std::size_t n = 1 + spec.legCount * spec.legLength;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<std::string> labels(n);
  labels[0] = "v_0";
  for (std::size_t leg = 1; leg <= spec.legCount; ++leg) {
    for (std::size_t layer = 1; layer <= spec.legLength; ++layer) {
      Vertex v = spiderVertex(spec, layer, leg);
      labels[v] = spiderLabel(layer, leg);
      edges.emplace_back(layer == 1 ? 0 : v - 1, v);
    }
  }
  return Graph::fromEdges(n, edges, std::move(labels));
}

// Gadgets beyond this many vertices are refused rather than allocated.
inline constexpr std::size_t kMaxGadgetVertices = 10'000'000;

inline SpiderSpec gadgetSpec(const BigInt& legs, std::size_t legLength, const char* name) {
  if (legs * legLength + 1 > kMaxGadgetVertices)
    throw std::overflow_error(std::string(name) + " would have more than " +
                              std::to_string(kMaxGadgetVertices) + " vertices");
  return {legs.convert_to<std::size_t>(), legLength};
}

inline SpiderSpec skSpec(std::size_t k) { return gadgetSpec(wValue(k), k, "S_k"); }
inline SpiderSpec tkSpec(std::size_t k) { return gadgetSpec(fValue(k), k + 1, "T_k"); }

/// S_k: w(k) legs of length k.
inline Graph buildSk(std::size_t k) { return buildSpider(skSpec(k)); }

/// T_k: f(k) legs of length k+1.
inline Graph buildTk(std::size_t k) { return buildSpider(tkSpec(k)); }

struct TightLeafPowerInstance {
  LeafRoot leafRoot;
  Graph graph;        // (T_{k-2})^{k-2}
  Graph steinerRoot;  // T_{k-2}; the identity embedding has no Steiner vertices
};

/// A k-leaf power whose boxicity is k-1: G = (T_{k-2})^{k-2}. The leaf root
/// hangs a pendant leaf below every vertex of T_{k-2}; pendants of x and y
/// are at distance d(x,y) + 2, so pendant distance <= k iff d(x,y) <= k-2.
inline TightLeafPowerInstance buildTightLeafPowerInstance(std::size_t k) {
  if (k < 3) throw std::invalid_argument("tight leaf power instance requires k >= 3");
  Graph base = buildTk(k - 2);
  Graph g = power(base, k - 2);
  const std::size_t n = base.vertexCount();
  auto edges = base.edges();
  std::vector<std::string> labels = base.labels();
  std::vector<Vertex> leafOf(n);
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(v, n + v);
    labels.push_back(base.label(v) + "'");
    leafOf[v] = n + v;
  }
  Graph rootTree = Graph::fromEdges(2 * n, edges, std::move(labels));
  return {LeafRoot(std::move(rootTree), k, std::move(leafOf)), std::move(g), std::move(base)};
}

}  // namespace boxpow
