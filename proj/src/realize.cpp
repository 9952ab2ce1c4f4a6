#include "swalk/realize.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <deque>

namespace swalk {

std::vector<EdgeIndex> SpanningForest::non_tree_edges() const {
  std::vector<EdgeIndex> out;
  for (std::size_t i = 0; i < tree_edge.size(); ++i)
    if (!tree_edge[i]) out.push_back(edge_at(i));
  return out;
}

SpanningForest build_spanning_forest(const GraphPtr& graph) {
  const auto& g = *graph;
  SpanningForest f;
  f.graph = graph;
  f.root_of.assign(g.vertex_count(), VertexIndex{});
  f.tree_edge.assign(g.edge_count(), false);
  std::vector<std::optional<Walk>> path(g.vertex_count());
  std::deque<VertexIndex> queue;

  for (std::size_t r = 0; r < g.vertex_count(); ++r) {
    if (path[r]) continue;
    const auto root = vertex_at(r);
    f.roots.push_back(root);
    path[r].emplace(g, root);
    f.root_of[r] = root;
    queue.push_back(root);
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto [e, w] : g.incident(v)) {
        if (path[index_of(w)]) continue;
        f.tree_edge[index_of(e)] = true;
        f.root_of[index_of(w)] = root;
        WalkBuilder b(g, root);
        b.append(*path[index_of(v)]);
        b.push({e, v, w});
        path[index_of(w)] = b.build();
        queue.push_back(w);
      }
    }
  }
  for (auto& p : path) f.tree_path.push_back(std::move(*p));
  return f;
}

Walk fundamental_walk(const SpanningForest& forest, EdgeIndex e) {
  const auto& g = *forest.graph;
  if (!g.contains(e)) throw GraphError("unknown edge #" + std::to_string(index_of(e)));
  if (forest.is_tree_edge(e)) throw GraphError("edge " + g.edge_id(e) + " is a tree edge");
  const auto [u, v] = g.ends(e);
  WalkBuilder b(g, forest.root_of[index_of(u)]);
  b.append(forest.tree_path[index_of(u)]);
  b.push({e, u, v});
  b.append_inverse(forest.tree_path[index_of(v)]);
  return b.build();
}

Signature reconstruct_signature(const WalkSetOracle& oracle) {
  const auto forest = build_spanning_forest(oracle.graph_ptr());
  std::vector<Sign> signs(oracle.graph().edge_count(), Sign::plus);
  for (auto e : forest.non_tree_edges()) {
    auto w = fundamental_walk(forest, e);
    auto s = sigma_of(oracle, w);
    if (!s)
      throw UnknownMembershipError("fundamental walk " + to_string(w) + " of edge " + oracle.graph().edge_id(e) +
                                   " is beyond the walk set's bound; a larger bound is needed");
    signs[index_of(e)] = *s;
  }
  return Signature(oracle.graph_ptr(), std::move(signs));
}

CheckReport verify_realization(const Signature& sig, const WalkSetOracle& oracle, std::size_t max_len,
                               const EnumerationLimits& limits) {
  if (sig.graph_ptr() != oracle.graph_ptr()) throw GraphError("signature and walk set live on different graphs");
  CheckReport report;
  report.property = "realization by [" + to_string(sig) + "]";
  report.bound = "max-len " + std::to_string(max_len);
  bool unknown = false;
  for (const auto& w : shortest_first(enumerate_closed_walks(oracle.graph(), max_len, limits))) {
    const auto m = oracle.membership(w);
    ++report.checked;
    if (m == Membership::unknown) {
      unknown = true;
      continue;
    }
    const auto s = sign_of_walk(sig, w);
    if ((m == Membership::in) != (s == Sign::minus)) {
      report.verdict = Verdict::fail;
      report.witness = Witness{{{"W", w}},
                               std::string("W ") + (m == Membership::in ? "in set" : "not in set") +
                                   " but its sign is " + to_char(s)};
      return report;
    }
  }
  report.verdict = unknown ? Verdict::inconclusive : Verdict::pass;
  return report;
}

bool Refutation::all_refuted() const {
  return std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.has_value(); });
}

std::vector<std::size_t> Refutation::unrefuted() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    if (!witnesses[i]) out.push_back(i);
  return out;
}

Refutation exhaustive_refute(const WalkSetOracle& oracle, std::size_t max_len, const RealizeLimits& limits) {
  const auto& g = oracle.graph();
  const auto count = signature_count(g, limits.max_refute_edges);
  const auto walks = shortest_first(enumerate_closed_walks(g, max_len, limits.enumeration));

  // Oracle answers and edge-multiplicity parities, once per walk.
  std::vector<bool> in_set(walks.size());
  std::vector<std::uint64_t> parity(walks.size(), 0);
  const auto m = g.edge_count();
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto a = oracle.membership(walks[i]);
    if (a == Membership::unknown)
      throw UnknownMembershipError("membership of " + to_string(walks[i]) + " is unknown beyond the set's bound");
    in_set[i] = a == Membership::in;
    // Bit (m-1-e) matches signature_at's digit order.
    for (const auto& s : walks[i].steps()) parity[i] ^= std::uint64_t{1} << (m - 1 - index_of(s.edge));
  }

  Refutation out;
  out.bound = max_len;
  std::vector<std::size_t> first(count, walks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(count); ++kk) {
    const auto k = static_cast<std::uint64_t>(kk);
    for (std::size_t i = 0; i < walks.size(); ++i) {
      const bool negative = std::popcount(parity[i] & k) % 2 == 1;
      if (negative != in_set[i]) {
        first[k] = i;
        break;
      }
    }
  }
  for (std::uint64_t k = 0; k < count; ++k) {
    out.signatures.push_back(signature_at(oracle.graph_ptr(), k));
    if (first[k] < walks.size())
      out.witnesses.emplace_back(walks[first[k]]);
    else
      out.witnesses.emplace_back(std::nullopt);
  }
  return out;
}

RealizabilityResult decide_realizable(const WalkSetOracle& oracle, std::size_t max_len, const RealizeLimits& limits) {
  RealizabilityResult result;
  result.bound = max_len;
  auto candidate = reconstruct_signature(oracle);
  const auto check = verify_realization(candidate, oracle, max_len, limits.enumeration);
  if (check.verdict == Verdict::inconclusive)
    throw UnknownMembershipError("walk set cannot answer every closed walk up to length " + std::to_string(max_len) +
                                 "; a larger bound is needed");
  if (check.passed()) {
    result.verdict = Realizability::realizable_at_bound;
    result.signature = std::move(candidate);
    return result;
  }
  result.verdict = Realizability::not_realizable;
  result.signature = std::move(candidate);
  result.witness = check.witness->walks.front().walk;
  if (oracle.graph().edge_count() <= limits.max_refute_edges)
    result.refutation = exhaustive_refute(oracle, max_len, limits);
  return result;
}

bool negative_closed_walk_at(const Signature& sig, VertexIndex v0, std::size_t max_len,
                             const EnumerationLimits& limits) {
  for (const auto& w : enumerate_walks(sig.graph(), v0, v0, max_len, limits))
    if (sign_of_walk(sig, w) == Sign::minus) return true;
  return false;
}

WalkSetOracle build_section2_oracle(const Signature& sig, VertexIndex v0) {
  if (!sig.graph().contains(v0)) throw GraphError("v0 is not a vertex of the graph");
  if (!in_unbalanced_component(sig, v0))
    throw GraphError("vertex " + sig.graph().vertex_id(v0) +
                     " lies on no negative closed walk; the construction needs v0 on a negative cycle");
  return WalkSetOracle::section2_unchecked(sig, v0);
}

}  // namespace swalk
