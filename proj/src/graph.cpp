#include "swalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace swalk {

namespace {

template <class Ids>
std::optional<std::size_t> find_sorted(const Ids& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace

std::optional<VertexIndex> Multigraph::find_vertex(std::string_view id) const {
  if (auto i = find_sorted(vertex_ids_, id)) return vertex_at(*i);
  return std::nullopt;
}

std::optional<EdgeIndex> Multigraph::find_edge(std::string_view id) const {
  if (auto i = find_sorted(edge_ids_, id)) return edge_at(*i);
  return std::nullopt;
}

std::optional<VertexIndex> Multigraph::across(EdgeIndex e, VertexIndex v) const {
  auto [a, b] = ends(e);
  if (a == v) return b;
  if (b == v) return a;
  return std::nullopt;
}

GraphPtr build_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end())
    throw GraphError("duplicate vertex id \"" + *dup + "\"");

  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].id == edges[i].id) throw GraphError("duplicate edge id \"" + edges[i].id + "\"");

  std::shared_ptr<Multigraph> g(new Multigraph());
  g->vertex_ids_ = std::move(vertices);

  auto resolve = [&](const EdgeSpec& e, const std::string& end) {
    auto v = g->find_vertex(end);
    if (!v) throw GraphError("edge \"" + e.id + "\": endpoint \"" + end + "\" is not a vertex");
    return *v;
  };

  std::vector<std::vector<Incidence>> adjacency(g->vertex_ids_.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto a = resolve(edges[i], edges[i].first);
    const auto b = resolve(edges[i], edges[i].second);
    g->edge_ids_.push_back(std::move(edges[i].id));
    g->ends_.emplace_back(a, b);
    adjacency[index_of(a)].push_back({edge_at(i), b});
    if (a != b) adjacency[index_of(b)].push_back({edge_at(i), a});
  }

  // Edges were inserted in id order, so each adjacency list is already sorted.
  g->offsets_.push_back(0);
  for (auto& list : adjacency) {
    g->incidence_.insert(g->incidence_.end(), list.begin(), list.end());
    g->offsets_.push_back(g->incidence_.size());
  }
  return g;
}

Signature::Signature(GraphPtr graph, std::vector<Sign> signs) : graph_(std::move(graph)), signs_(std::move(signs)) {
  if (!graph_) throw GraphError("signature without a graph");
  if (signs_.size() != graph_->edge_count())
    throw GraphError("signature assigns " + std::to_string(signs_.size()) + " signs to a graph with " +
                     std::to_string(graph_->edge_count()) + " edges");
}

Signature Signature::all_plus(GraphPtr graph) {
  const auto m = graph ? graph->edge_count() : 0;
  return Signature(std::move(graph), std::vector<Sign>(m, Sign::plus));
}

Signature Signature::with(EdgeIndex e, Sign s) const {
  auto signs = signs_;
  signs.at(index_of(e)) = s;
  return Signature(graph_, std::move(signs));
}

std::size_t Signature::minus_count() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::minus));
}

std::string to_string(const Signature& sig) {
  std::string out;
  for (std::size_t i = 0; i < sig.signs().size(); ++i) {
    if (i) out += ' ';
    out += sig.graph().edge_id(edge_at(i));
    out += ':';
    out += to_char(sig.signs()[i]);
  }
  return out;
}

Signature apply_switching(const Signature& sig, std::span<const VertexIndex> switch_set) {
  const auto& g = sig.graph();
  std::vector<bool> in_set(g.vertex_count(), false);
  for (auto v : switch_set) {
    if (!g.contains(v)) throw GraphError("switching set contains unknown vertex #" + std::to_string(index_of(v)));
    in_set[index_of(v)] = true;
  }
  std::vector<Sign> signs(sig.signs().begin(), sig.signs().end());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    auto [a, b] = g.ends(edge_at(i));
    if (in_set[index_of(a)] != in_set[index_of(b)]) signs[i] = negate(signs[i]);
  }
  return Signature(sig.graph_ptr(), std::move(signs));
}

std::uint64_t signature_count(const Multigraph& graph, std::size_t max_edges) {
  if (graph.edge_count() > max_edges || graph.edge_count() >= 64)
    throw CapError("signature enumeration over " + std::to_string(graph.edge_count()) +
                   " edges exceeds the cap of " + std::to_string(max_edges));
  return std::uint64_t{1} << graph.edge_count();
}

Signature signature_at(const GraphPtr& graph, std::uint64_t ordinal) {
  const auto m = graph->edge_count();
  std::vector<Sign> signs(m, Sign::plus);
  for (std::size_t i = 0; i < m; ++i)
    if ((ordinal >> (m - 1 - i)) & 1U) signs[i] = Sign::minus;
  return Signature(graph, std::move(signs));
}

std::vector<Signature> enumerate_signatures(const GraphPtr& graph, std::size_t max_edges) {
  const auto count = signature_count(*graph, max_edges);
  std::vector<Signature> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(signature_at(graph, k));
  return out;
}

std::vector<std::size_t> component_labels(const Multigraph& graph) {
  const auto n = graph.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::deque<VertexIndex> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != unset) continue;
    label[root] = root;
    queue.push_back(vertex_at(root));
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto [e, w] : graph.incident(v)) {
        if (label[index_of(w)] == unset) {
          label[index_of(w)] = root;
          queue.push_back(w);
        }
      }
    }
  }
  return label;
}

std::vector<std::optional<Sign>> balance_potentials(const Signature& sig) {
  const auto& g = sig.graph();
  const auto n = g.vertex_count();
  std::vector<std::optional<Sign>> potential(n);
  std::vector<bool> seen(n, false);
  std::deque<VertexIndex> queue;
  std::vector<std::size_t> members;

  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    bool balanced = true;
    members.clear();
    seen[root] = true;
    potential[root] = Sign::plus;
    queue.push_back(vertex_at(root));
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      members.push_back(index_of(v));
      for (auto [e, w] : g.incident(v)) {
        const Sign expected = *potential[index_of(v)] * sig[e];
        if (!seen[index_of(w)]) {
          seen[index_of(w)] = true;
          potential[index_of(w)] = expected;
          queue.push_back(w);
        } else if (potential[index_of(w)] != expected) {
          balanced = false;
        }
      }
    }
    if (!balanced)
      for (auto m : members) potential[m].reset();
  }
  return potential;
}

bool in_unbalanced_component(const Signature& sig, VertexIndex v) {
  if (!sig.graph().contains(v)) throw GraphError("unknown vertex #" + std::to_string(index_of(v)));
  return !balance_potentials(sig)[index_of(v)].has_value();
}

bool is_balanced(const Signature& sig) {
  auto p = balance_potentials(sig);
  return std::all_of(p.begin(), p.end(), [](const auto& s) { return s.has_value(); });
}

std::optional<std::vector<VertexIndex>> switching_equivalent(const Signature& a, const Signature& b) {
  if (a.graph_ptr() != b.graph_ptr()) throw GraphError("signatures live on different graphs");
  const auto& g = a.graph();

  // a and b are switching equivalent iff their product is balanced; the
  // potentials of the product mark one side of the switching cut.
  std::vector<Sign> product(g.edge_count());
  for (std::size_t i = 0; i < product.size(); ++i) product[i] = a.signs()[i] * b.signs()[i];
  const auto potential = balance_potentials(Signature(a.graph_ptr(), std::move(product)));
  if (!std::all_of(potential.begin(), potential.end(), [](const auto& s) { return s.has_value(); }))
    return std::nullopt;

  const auto label = component_labels(g);
  std::vector<std::size_t> minus_side(g.vertex_count(), 0), size(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    ++size[label[v]];
    if (*potential[v] == Sign::minus) ++minus_side[label[v]];
  }
  std::vector<VertexIndex> switch_set;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto c = label[v];
    const bool take_minus = 2 * minus_side[c] <= size[c];
    if ((*potential[v] == Sign::minus) == take_minus) switch_set.push_back(vertex_at(v));
  }
  return switch_set;
}

}  // namespace swalk
