#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swalk/graph.hpp"

namespace swalk {

/// One oriented traversal of an edge. A loop has a single orientation.
struct Step {
  EdgeIndex edge;
  VertexIndex tail;
  VertexIndex head;

  auto operator<=>(const Step&) const = default;
};

/// A step sequence that does not chain, or an edge that is not incident to the
/// current vertex. position() is 1-based over the input edge list.
class WalkError : public std::invalid_argument {
 public:
  WalkError(const std::string& what, std::size_t position) : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Rooted, directed walk: a start vertex and a chain of steps. Closed walks and
/// their rotations are distinct values. Holds a non-owning pointer to its
/// graph, which must outlive the walk.
class Walk {
 public:
  /// Trivial walk e_v.
  Walk(const Multigraph& graph, VertexIndex start);
  /// Validates the chain condition; throws WalkError.
  Walk(const Multigraph& graph, VertexIndex start, std::vector<Step> steps);

  const Multigraph& graph() const noexcept { return *graph_; }
  VertexIndex start() const noexcept { return start_; }
  VertexIndex end() const noexcept { return steps_.empty() ? start_ : steps_.back().head; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool trivial() const noexcept { return steps_.empty(); }
  bool closed() const noexcept { return end() == start_; }
  std::span<const Step> steps() const noexcept { return steps_; }

  bool same_graph(const Walk& other) const noexcept { return graph_ == other.graph_; }

  bool operator==(const Walk& other) const noexcept {
    return graph_ == other.graph_ && start_ == other.start_ && steps_ == other.steps_;
  }
  /// Orders by start vertex id, then step sequence. Only meaningful within one graph.
  std::strong_ordering operator<=>(const Walk& other) const noexcept {
    if (auto c = start_ <=> other.start_; c != 0) return c;
    return steps_ <=> other.steps_;
  }

 private:
  friend class WalkBuilder;
  struct unchecked_t {};
  Walk(unchecked_t, const Multigraph& graph, VertexIndex start, std::vector<Step> steps)
      : graph_(&graph), start_(start), steps_(std::move(steps)) {}

  const Multigraph* graph_;
  VertexIndex start_;
  std::vector<Step> steps_;
};

/// Builds walks step by step without re-validating the whole chain; used by
/// the enumerators and kernels. Every append is checked against the current end.
class WalkBuilder {
 public:
  WalkBuilder(const Multigraph& graph, VertexIndex start) : graph_(&graph), start_(start) {}

  void reset(VertexIndex start) {
    start_ = start;
    steps_.clear();
  }
  VertexIndex end() const noexcept { return steps_.empty() ? start_ : steps_.back().head; }
  std::size_t length() const noexcept { return steps_.size(); }

  void push(Step s);
  void pop() { steps_.pop_back(); }
  void append(const Walk& w);
  void append_inverse(const Walk& w);

  Walk build() const { return Walk(Walk::unchecked_t{}, *graph_, start_, steps_); }

 private:
  const Multigraph* graph_;
  VertexIndex start_;
  std::vector<Step> steps_;
};

/// Orientation of each step is forced by the current vertex.
Walk make_walk(const Multigraph& graph, VertexIndex start, std::span<const EdgeIndex> edges);
/// Identifier form, as used by documents. Unknown ids are reported as WalkError too.
Walk make_walk(const Multigraph& graph, std::string_view start, std::span<const std::string> edges);

Walk concat(const Walk& first, const Walk& second);
Walk inverse(const Walk& walk);

/// Start after k steps: the head of the k-th step becomes the start.
Walk rotate(const Walk& walk, std::size_t k);
/// Distinct rotations in order of first appearance by k.
std::vector<Walk> rotations(const Walk& walk);
/// Least member of rotations(walk).
Walk canonical_rotation(const Walk& walk);

Sign sign_of_walk(const Signature& sig, const Walk& walk);

/// Alternating notation, e.g. (v0,e01,v1,e12,v2,e20,v0).
std::string to_string(const Walk& walk);
/// Edge ids only, e.g. ["e01","e12"] as a plain list.
std::vector<std::string> edge_ids(const Walk& walk);

struct EnumerationLimits {
  std::uint64_t max_walks = 1'000'000;
};

/// Number of xy-walks of length <= max_len, saturating at UINT64_MAX.
std::uint64_t count_walks(const Multigraph& graph, VertexIndex x, VertexIndex y, std::size_t max_len);
std::uint64_t count_closed_walks(const Multigraph& graph, std::size_t max_len);

/// All xy-walks of length <= max_len in depth-first order, edges tried in id
/// order. The trivial walk comes first when x == y. Throws CapError before
/// enumerating if the count exceeds the cap.
std::vector<Walk> enumerate_walks(const Multigraph& graph, VertexIndex x, VertexIndex y, std::size_t max_len,
                                  const EnumerationLimits& limits = {});

/// enumerate_walks(v, v, max_len) for every vertex v in id order.
std::vector<Walk> enumerate_closed_walks(const Multigraph& graph, std::size_t max_len,
                                         const EnumerationLimits& limits = {});

/// Stable reorder by length, so scans report shortest witnesses first.
std::vector<Walk> shortest_first(std::vector<Walk> walks);

}  // namespace swalk
