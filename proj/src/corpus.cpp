#include "swalk/corpus.hpp"

#include <functional>

namespace swalk {

std::vector<GraphPtr> generate_corpus(const CorpusParams& params) {
  if (params.max_vertices > corpus_vertex_cap)
    throw CapError("corpus: at most " + std::to_string(corpus_vertex_cap) + " vertices supported");
  if (params.max_edges > corpus_edge_cap)
    throw CapError("corpus: at most " + std::to_string(corpus_edge_cap) + " edges supported");
  if (params.min_vertices < 1 || params.min_vertices > params.max_vertices)
    throw GraphError("corpus: need 1 <= min-vertices <= max-vertices");

  std::vector<GraphPtr> out;
  for (std::size_t n = params.min_vertices; n <= params.max_vertices; ++n) {
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));

    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (i != j || params.loops) slots.emplace_back(i, j);

    // Non-decreasing slot sequences are exactly the endpoint multisets.
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t from) {
      if (remaining == 0) {
        std::vector<EdgeSpec> edges;
        for (std::size_t k = 0; k < chosen.size(); ++k) {
          const auto [i, j] = slots[chosen[k]];
          std::size_t copy = 0;
          for (std::size_t p = 0; p < k; ++p) copy += chosen[p] == chosen[k];
          auto id = "e" + std::to_string(i) + std::to_string(j);
          if (copy) id += "_" + std::to_string(copy);
          edges.push_back({std::move(id), vertices[i], vertices[j]});
        }
        out.push_back(build_graph(vertices, std::move(edges)));
        return;
      }
      for (std::size_t s = from; s < slots.size(); ++s) {
        chosen.push_back(s);
        extend(remaining - 1, params.parallel_edges ? s : s + 1);
        chosen.pop_back();
      }
    };
    for (std::size_t m = 0; m <= params.max_edges; ++m) extend(m, 0);
  }
  return out;
}

GraphPtr triangle_graph() {
  return build_graph({"v0", "v1", "v2"}, {{"e01", "v0", "v1"}, {"e12", "v1", "v2"}, {"e20", "v2", "v0"}});
}

Signature triangle_counterexample_signature(const GraphPtr& triangle) {
  auto e01 = triangle->find_edge("e01");
  if (!e01) throw GraphError("graph has no edge e01");
  return Signature::all_plus(triangle).with(*e01, Sign::minus);
}

}  // namespace swalk
