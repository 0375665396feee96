#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace boxpow {

// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  Interval() = default;
  Interval(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
    if (lo > hi)
      throw std::invalid_argument("invalid interval [" + std::to_string(lo) + "," +
                                  std::to_string(hi) + "]");
  }

  bool overlaps(const Interval& other) const {
    return std::max(lo, other.lo) <= std::min(hi, other.hi);
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Which interval family a representation belongs to: the depth graph, or the
// layer graph with index i. User-supplied representations carry no tag.
struct RepTag {
  enum class Kind { none, depth, layer };
  Kind kind = Kind::none;
  std::size_t layer = 0;

  static RepTag depth() { return {Kind::depth, 0}; }
  static RepTag ofLayer(std::size_t i) { return {Kind::layer, i}; }
  friend bool operator==(const RepTag&, const RepTag&) = default;
};

struct IntervalRep {
  std::vector<Interval> intervals;  // one per vertex
  RepTag tag;

  std::size_t vertexCount() const { return intervals.size(); }
};

// One d-box (d closed intervals) per vertex.
class BoxRep {
 public:
  BoxRep() = default;
  BoxRep(std::size_t dimension, std::vector<std::vector<Interval>> boxes)
      : dimension_(dimension), boxes_(std::move(boxes)) {
    if (dimension_ == 0) throw std::invalid_argument("box dimension must be at least 1");
    for (std::size_t v = 0; v < boxes_.size(); ++v)
      if (boxes_[v].size() != dimension_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " has " +
                                    std::to_string(boxes_[v].size()) + " intervals, expected " +
                                    std::to_string(dimension_));
  }

  /// Stacks per-coordinate representations; all must cover the same vertex set.
  static BoxRep fromCoordinates(std::span<const IntervalRep> coordinates) {
    if (coordinates.empty()) throw std::invalid_argument("need at least one coordinate");
    const std::size_t n = coordinates.front().vertexCount();
    std::vector<std::vector<Interval>> boxes(n);
    for (const auto& coordinate : coordinates) {
      if (coordinate.vertexCount() != n)
        throw std::invalid_argument("coordinate representations cover different vertex counts");
      for (Vertex v = 0; v < n; ++v) boxes[v].push_back(coordinate.intervals[v]);
    }
    return BoxRep(coordinates.size(), std::move(boxes));
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t vertexCount() const { return boxes_.size(); }
  const std::vector<Interval>& box(Vertex v) const { return boxes_.at(v); }
  const std::vector<std::vector<Interval>>& boxes() const { return boxes_; }

  IntervalRep coordinate(std::size_t c) const {
    if (c >= dimension_) throw std::out_of_range("coordinate " + std::to_string(c) + " out of range");
    IntervalRep rep;
    rep.intervals.reserve(boxes_.size());
    for (const auto& b : boxes_) rep.intervals.push_back(b[c]);
    return rep;
  }

  bool boxesMeet(Vertex u, Vertex v) const {
    const auto& a = boxes_.at(u);
    const auto& b = boxes_.at(v);
    for (std::size_t c = 0; c < dimension_; ++c)
      if (!a[c].overlaps(b[c])) return false;
    return true;
  }

  /// Appends coordinates in which every vertex gets [0,0]; the intersection graph is unchanged.
  BoxRep paddedTo(std::size_t dimension) const {
    if (dimension < dimension_) throw std::invalid_argument("cannot pad to a smaller dimension");
    auto boxes = boxes_;
    for (auto& b : boxes) b.resize(dimension, Interval{0, 0});
    return BoxRep(dimension, std::move(boxes));
  }

 private:
  std::size_t dimension_ = 1;
  std::vector<std::vector<Interval>> boxes_;
};

}  // namespace boxpow
