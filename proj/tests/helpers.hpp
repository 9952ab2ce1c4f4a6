#pragma once

#include <string>
#include <vector>

#include "swalk/corpus.hpp"
#include "swalk/walk.hpp"

namespace swalk::testing {

// "-++" over the edges in id order.
inline Signature sig_of(const GraphPtr& g, const std::string& signs) {
  std::vector<Sign> s;
  for (char c : signs) s.push_back(c == '-' ? Sign::minus : Sign::plus);
  return Signature(g, s);
}

inline Walk walk_of(const GraphPtr& g, const std::string& start, std::vector<std::string> edges) {
  return make_walk(*g, start, edges);
}

inline VertexIndex vx(const GraphPtr& g, const std::string& id) { return *g->find_vertex(id); }

// v0 with one loop e00.
inline GraphPtr loop_graph() { return build_graph({"v0"}, {{"e00", "v0", "v0"}}); }

// v0, v1 joined by a and b.
inline GraphPtr digon_graph() { return build_graph({"v0", "v1"}, {{"a", "v0", "v1"}, {"b", "v0", "v1"}}); }

}  // namespace swalk::testing
