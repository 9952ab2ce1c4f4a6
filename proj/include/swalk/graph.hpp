#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swalk/sign.hpp"

namespace swalk {

// Indices are positions in the lexicographically sorted identifier lists, so
// comparing indices compares identifiers.
enum class VertexIndex : std::uint32_t {};
enum class EdgeIndex : std::uint32_t {};

constexpr std::size_t index_of(VertexIndex v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index_of(EdgeIndex e) noexcept { return static_cast<std::size_t>(e); }
constexpr VertexIndex vertex_at(std::size_t i) noexcept { return static_cast<VertexIndex>(i); }
constexpr EdgeIndex edge_at(std::size_t i) noexcept { return static_cast<EdgeIndex>(i); }

/// Malformed graph, signature or vertex-set input.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct EdgeSpec {
  std::string id;
  std::string first;
  std::string second;
};

/// One way to leave a vertex: the edge and the vertex it arrives at.
struct Incidence {
  EdgeIndex edge;
  VertexIndex head;
};

/// Undirected multigraph with loops and parallel edges. Immutable once built;
/// share it through std::shared_ptr<const Multigraph>.
class Multigraph {
 public:
  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_ids_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(index_of(v)); }
  const std::string& edge_id(EdgeIndex e) const { return edge_ids_.at(index_of(e)); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  /// Endpoints in declaration order; equal for a loop.
  std::pair<VertexIndex, VertexIndex> ends(EdgeIndex e) const { return ends_.at(index_of(e)); }
  bool is_loop(EdgeIndex e) const {
    auto [a, b] = ends(e);
    return a == b;
  }

  /// Steps leaving v, ordered by edge id. A loop appears once.
  std::span<const Incidence> incident(VertexIndex v) const {
    const auto i = index_of(v);
    return {incidence_.data() + offsets_.at(i), incidence_.data() + offsets_.at(i + 1)};
  }

  /// The other endpoint of e as seen from v; nullopt if e does not touch v.
  std::optional<VertexIndex> across(EdgeIndex e, VertexIndex v) const;

  bool contains(VertexIndex v) const noexcept { return index_of(v) < vertex_count(); }
  bool contains(EdgeIndex e) const noexcept { return index_of(e) < edge_count(); }

  bool operator==(const Multigraph& other) const = default;

 private:
  friend std::shared_ptr<const Multigraph> build_graph(std::vector<std::string>, std::vector<EdgeSpec>);
  Multigraph() = default;

  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::pair<VertexIndex, VertexIndex>> ends_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

using GraphPtr = std::shared_ptr<const Multigraph>;

/// Throws GraphError on duplicate vertex ids, duplicate edge ids, or an
/// endpoint that is not a declared vertex.
GraphPtr build_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

/// Total map from the edges of one graph to signs.
class Signature {
 public:
  Signature(GraphPtr graph, std::vector<Sign> signs);

  static Signature all_plus(GraphPtr graph);

  const Multigraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }

  Sign operator[](EdgeIndex e) const { return signs_.at(index_of(e)); }
  std::span<const Sign> signs() const noexcept { return signs_; }

  Signature with(EdgeIndex e, Sign s) const;
  std::size_t minus_count() const noexcept;

  /// Same graph object and same signs.
  bool operator==(const Signature& other) const noexcept {
    return graph_ == other.graph_ && signs_ == other.signs_;
  }

 private:
  GraphPtr graph_;
  std::vector<Sign> signs_;
};

/// "e01:- e12:+ e20:+" in edge id order.
std::string to_string(const Signature& sig);

/// Negates every non-loop edge with exactly one endpoint in `switch_set`.
Signature apply_switching(const Signature& sig, std::span<const VertexIndex> switch_set);

/// 2^|E|, after checking |E| against `max_edges`.
std::uint64_t signature_count(const Multigraph& graph, std::size_t max_edges = 20);

/// The ordinal-th signature in enumeration order: edges by id, read as a
/// binary counter with + = 0 and the first edge as the most significant digit.
Signature signature_at(const GraphPtr& graph, std::uint64_t ordinal);

std::vector<Signature> enumerate_signatures(const GraphPtr& graph, std::size_t max_edges = 20);

/// Connected component label per vertex; labels follow the least vertex of
/// each component.
std::vector<std::size_t> component_labels(const Multigraph& graph);

/// Vertex potentials p with sig(e) = p(u) p(v) on every edge, rooted at + on
/// the least vertex of each component. nullopt per vertex whose component is
/// unbalanced.
std::vector<std::optional<Sign>> balance_potentials(const Signature& sig);

/// True iff v lies in a component containing a negative closed walk.
bool in_unbalanced_component(const Signature& sig, VertexIndex v);

bool is_balanced(const Signature& sig);

/// Some S with apply_switching(a, S) == b, or nullopt when none exists. Per
/// component the smaller side of the cut is returned (ties keep the least
/// vertex unswitched). Throws GraphError if the signatures live on different
/// graphs.
std::optional<std::vector<VertexIndex>> switching_equivalent(const Signature& a, const Signature& b);

}  // namespace swalk
