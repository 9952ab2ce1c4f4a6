#pragma once

#include <vector>

#include "swalk/graph.hpp"

namespace swalk {

struct CorpusParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 3;
  std::size_t max_edges = 4;
  bool loops = true;
  bool parallel_edges = true;
};

inline constexpr std::size_t corpus_vertex_cap = 6;
inline constexpr std::size_t corpus_edge_cap = 8;

/// Every labeled multigraph on n vertices (min_vertices <= n <= max_vertices)
/// with at most max_edges edges, as edge multisets over endpoint pairs.
/// Vertices are v0..v{n-1}; an edge between vi and vj (i <= j) is "eij", and
/// further parallel copies are "eij_1", "eij_2", ... Order: by vertex count,
/// then edge count, then endpoint multiset in lexicographic order.
std::vector<GraphPtr> generate_corpus(const CorpusParams& params);

/// The 3-cycle v0 v1 v2 with edges e01, e12, e20.
GraphPtr triangle_graph();

/// The triangle with e01 negative and the other edges positive.
Signature triangle_counterexample_signature(const GraphPtr& triangle);

}  // namespace swalk
