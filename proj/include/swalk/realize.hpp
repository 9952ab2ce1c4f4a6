#pragma once

#include <optional>
#include <vector>

#include "swalk/checks.hpp"

namespace swalk {

/// Breadth-first spanning forest. Roots are the least vertex of each
/// component; edges are tried in id order; loops never enter the forest.
struct SpanningForest {
  GraphPtr graph;
  std::vector<VertexIndex> roots;
  std::vector<VertexIndex> root_of;      // per vertex
  std::vector<bool> tree_edge;           // per edge
  std::vector<Walk> tree_path;           // per vertex, from its root

  bool is_tree_edge(EdgeIndex e) const { return tree_edge.at(index_of(e)); }
  std::vector<EdgeIndex> non_tree_edges() const;
};

SpanningForest build_spanning_forest(const GraphPtr& graph);

/// tree_path(u), e from u to v, inverse(tree_path(v)), where (u, v) are the
/// declared endpoints of e. Throws GraphError for a tree edge.
Walk fundamental_walk(const SpanningForest& forest, EdgeIndex e);

/// Tree edges plus, each non-tree edge the oracle's sign of its fundamental
/// walk. Throws UnknownMembershipError when a fundamental walk is unknown.
Signature reconstruct_signature(const WalkSetOracle& oracle);

/// Members up to max_len are exactly the negative closed walks of `sig`.
CheckReport verify_realization(const Signature& sig, const WalkSetOracle& oracle, std::size_t max_len,
                               const EnumerationLimits& limits = {});

/// Per signature (enumeration order), the first closed walk of length <=
/// max_len where it disagrees with the oracle; nullopt entries are unrefuted.
struct Refutation {
  std::vector<Signature> signatures;
  std::vector<std::optional<Walk>> witnesses;
  std::size_t bound = 0;

  bool all_refuted() const;
  std::vector<std::size_t> unrefuted() const;
};

struct RealizeLimits {
  EnumerationLimits enumeration;
  std::size_t max_refute_edges = 12;
};

/// Evaluates the oracle once per closed walk, then scans signatures in
/// parallel. Throws CapError past max_refute_edges and UnknownMembershipError
/// when the oracle cannot answer within max_len.
Refutation exhaustive_refute(const WalkSetOracle& oracle, std::size_t max_len, const RealizeLimits& limits = {});

enum class Realizability : std::uint8_t { realizable_at_bound, not_realizable };

struct RealizabilityResult {
  Realizability verdict = Realizability::not_realizable;
  std::optional<Signature> signature;
  std::size_t bound = 0;
  /// Walk on which the reconstructed signature disagrees with the oracle.
  std::optional<Walk> witness;
  /// Present when the exhaustive fallback ran.
  std::optional<Refutation> refutation;
};

/// Reconstruct, then verify up to max_len. A failed verification is final
/// (the fundamental walks pin down the only candidate class); with few enough
/// edges every signature is also refuted individually for the report.
RealizabilityResult decide_realizable(const WalkSetOracle& oracle, std::size_t max_len,
                                      const RealizeLimits& limits = {});

/// The counterexample oracle: negative walks of `sig` minus those starting at
/// v0. Requires v0 to lie on a negative closed walk; throws GraphError otherwise.
WalkSetOracle build_section2_oracle(const Signature& sig, VertexIndex v0);

/// Scans closed walks at v0 up to max_len for a negative one.
bool negative_closed_walk_at(const Signature& sig, VertexIndex v0, std::size_t max_len,
                             const EnumerationLimits& limits = {});

}  // namespace swalk
