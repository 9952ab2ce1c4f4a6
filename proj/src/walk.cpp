#include "swalk/walk.hpp"

#include <algorithm>
#include <limits>

namespace swalk {

namespace {

constexpr std::uint64_t saturate = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > saturate - b ? saturate : a + b; }

bool step_fits(const Multigraph& g, const Step& s) {
  if (!g.contains(s.edge) || !g.contains(s.tail) || !g.contains(s.head)) return false;
  auto other = g.across(s.edge, s.tail);
  return other && *other == s.head;
}

std::string position_message(std::size_t pos, const std::string& detail) {
  return "walk step " + std::to_string(pos) + ": " + detail;
}

}  // namespace

Walk::Walk(const Multigraph& graph, VertexIndex start) : graph_(&graph), start_(start) {
  if (!graph.contains(start)) throw WalkError("walk starts at an unknown vertex", 0);
}

Walk::Walk(const Multigraph& graph, VertexIndex start, std::vector<Step> steps)
    : graph_(&graph), start_(start), steps_(std::move(steps)) {
  if (!graph.contains(start)) throw WalkError("walk starts at an unknown vertex", 0);
  VertexIndex at = start;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& s = steps_[i];
    if (s.tail != at || !step_fits(graph, s))
      throw WalkError(position_message(i + 1, "step does not continue the walk"), i + 1);
    at = s.head;
  }
}

void WalkBuilder::push(Step s) {
  if (s.tail != end() || !step_fits(*graph_, s))
    throw WalkError(position_message(steps_.size() + 1, "step does not continue the walk"), steps_.size() + 1);
  steps_.push_back(s);
}

void WalkBuilder::append(const Walk& w) {
  if (&w.graph() != graph_) throw WalkError("walks live on different graphs", steps_.size() + 1);
  if (w.start() != end()) throw WalkError("concatenation endpoint mismatch", steps_.size() + 1);
  steps_.insert(steps_.end(), w.steps().begin(), w.steps().end());
}

void WalkBuilder::append_inverse(const Walk& w) {
  if (&w.graph() != graph_) throw WalkError("walks live on different graphs", steps_.size() + 1);
  if (w.end() != end()) throw WalkError("concatenation endpoint mismatch", steps_.size() + 1);
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) steps_.push_back({it->edge, it->head, it->tail});
}

Walk make_walk(const Multigraph& graph, VertexIndex start, std::span<const EdgeIndex> edges) {
  if (!graph.contains(start)) throw WalkError("walk starts at an unknown vertex", 0);
  std::vector<Step> steps;
  steps.reserve(edges.size());
  VertexIndex at = start;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!graph.contains(edges[i])) throw WalkError(position_message(i + 1, "unknown edge"), i + 1);
    auto head = graph.across(edges[i], at);
    if (!head)
      throw WalkError(position_message(i + 1, "edge " + graph.edge_id(edges[i]) + " is not incident to " +
                                                  graph.vertex_id(at)),
                      i + 1);
    steps.push_back({edges[i], at, *head});
    at = *head;
  }
  return Walk(graph, start, std::move(steps));
}

Walk make_walk(const Multigraph& graph, std::string_view start, std::span<const std::string> edges) {
  auto s = graph.find_vertex(start);
  if (!s) throw WalkError("walk starts at unknown vertex \"" + std::string(start) + "\"", 0);
  std::vector<EdgeIndex> ids;
  ids.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto e = graph.find_edge(edges[i]);
    if (!e) throw WalkError(position_message(i + 1, "unknown edge \"" + edges[i] + "\""), i + 1);
    ids.push_back(*e);
  }
  return make_walk(graph, *s, ids);
}

Walk concat(const Walk& first, const Walk& second) {
  if (!first.same_graph(second)) throw WalkError("walks live on different graphs", first.length() + 1);
  if (first.end() != second.start()) throw WalkError("concatenation endpoint mismatch", first.length() + 1);
  WalkBuilder b(first.graph(), first.start());
  b.append(first);
  b.append(second);
  return b.build();
}

Walk inverse(const Walk& walk) {
  WalkBuilder b(walk.graph(), walk.end());
  b.append_inverse(walk);
  return b.build();
}

Walk rotate(const Walk& walk, std::size_t k) {
  if (!walk.closed()) throw WalkError("rotation of an open walk", 0);
  if (k >= std::max<std::size_t>(walk.length(), 1))
    throw WalkError("rotation index " + std::to_string(k) + " out of range for length " +
                        std::to_string(walk.length()),
                    0);
  if (k == 0) return walk;
  const auto steps = walk.steps();
  std::vector<Step> rotated(steps.begin() + static_cast<std::ptrdiff_t>(k), steps.end());
  rotated.insert(rotated.end(), steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(k));
  WalkBuilder b(walk.graph(), steps[k - 1].head);
  for (const auto& s : rotated) b.push(s);
  return b.build();
}

std::vector<Walk> rotations(const Walk& walk) {
  if (!walk.closed()) throw WalkError("rotations of an open walk", 0);
  std::vector<Walk> out;
  const auto n = std::max<std::size_t>(walk.length(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    auto r = rotate(walk, k);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Walk canonical_rotation(const Walk& walk) {
  auto all = rotations(walk);
  return *std::min_element(all.begin(), all.end());
}

Sign sign_of_walk(const Signature& sig, const Walk& walk) {
  if (&sig.graph() != &walk.graph()) throw GraphError("walk and signature live on different graphs");
  Sign s = Sign::plus;
  for (const auto& step : walk.steps()) s *= sig[step.edge];
  return s;
}

std::string to_string(const Walk& walk) {
  const auto& g = walk.graph();
  std::string out = "(" + g.vertex_id(walk.start());
  for (const auto& s : walk.steps()) {
    out += ',';
    out += g.edge_id(s.edge);
    out += ',';
    out += g.vertex_id(s.head);
  }
  out += ')';
  return out;
}

std::vector<std::string> edge_ids(const Walk& walk) {
  std::vector<std::string> out;
  out.reserve(walk.length());
  for (const auto& s : walk.steps()) out.push_back(walk.graph().edge_id(s.edge));
  return out;
}

namespace {

// reach[L][v]: number of walks of length exactly L from x to v.
std::vector<std::vector<std::uint64_t>> reach_counts(const Multigraph& graph, VertexIndex x, std::size_t max_len) {
  std::vector<std::vector<std::uint64_t>> reach(max_len + 1, std::vector<std::uint64_t>(graph.vertex_count(), 0));
  reach[0][index_of(x)] = 1;
  for (std::size_t len = 0; len < max_len; ++len)
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
      if (!reach[len][v]) continue;
      for (auto [e, w] : graph.incident(vertex_at(v)))
        reach[len + 1][index_of(w)] = sat_add(reach[len + 1][index_of(w)], reach[len][v]);
    }
  return reach;
}

void check_vertex(const Multigraph& graph, VertexIndex v) {
  if (!graph.contains(v)) throw GraphError("unknown vertex #" + std::to_string(index_of(v)));
}

[[noreturn]] void throw_cap(const std::string& what, std::size_t max_len, std::size_t fits, std::uint64_t cap) {
  throw CapError(what + " up to length " + std::to_string(max_len) + " exceeds the cap of " + std::to_string(cap) +
                 " walks (largest length within the cap: " + std::to_string(fits) + ")");
}

void dfs(const Multigraph& g, VertexIndex y, std::size_t max_len, WalkBuilder& path, std::vector<Walk>& out) {
  if (path.end() == y) out.push_back(path.build());
  if (path.length() == max_len) return;
  const auto at = path.end();
  for (auto [e, head] : g.incident(at)) {
    path.push({e, at, head});
    dfs(g, y, max_len, path, out);
    path.pop();
  }
}

}  // namespace

std::uint64_t count_walks(const Multigraph& graph, VertexIndex x, VertexIndex y, std::size_t max_len) {
  check_vertex(graph, x);
  check_vertex(graph, y);
  std::uint64_t total = 0;
  for (const auto& row : reach_counts(graph, x, max_len)) total = sat_add(total, row[index_of(y)]);
  return total;
}

std::uint64_t count_closed_walks(const Multigraph& graph, std::size_t max_len) {
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    total = sat_add(total, count_walks(graph, vertex_at(v), vertex_at(v), max_len));
  return total;
}

std::vector<Walk> enumerate_walks(const Multigraph& graph, VertexIndex x, VertexIndex y, std::size_t max_len,
                                  const EnumerationLimits& limits) {
  if (count_walks(graph, x, y, max_len) > limits.max_walks) {
    std::size_t fits = 0;
    while (fits < max_len && count_walks(graph, x, y, fits + 1) <= limits.max_walks) ++fits;
    throw_cap("enumeration of " + graph.vertex_id(x) + graph.vertex_id(y) + "-walks", max_len, fits,
              limits.max_walks);
  }
  std::vector<Walk> out;
  WalkBuilder path(graph, x);
  dfs(graph, y, max_len, path, out);
  return out;
}

std::vector<Walk> enumerate_closed_walks(const Multigraph& graph, std::size_t max_len,
                                         const EnumerationLimits& limits) {
  if (count_closed_walks(graph, max_len) > limits.max_walks) {
    std::size_t fits = 0;
    while (fits < max_len && count_closed_walks(graph, fits + 1) <= limits.max_walks) ++fits;
    throw_cap("enumeration of closed walks", max_len, fits, limits.max_walks);
  }
  std::vector<Walk> out;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    WalkBuilder path(graph, vertex_at(v));
    dfs(graph, vertex_at(v), max_len, path, out);
  }
  return out;
}

std::vector<Walk> shortest_first(std::vector<Walk> walks) {
  std::stable_sort(walks.begin(), walks.end(), [](const Walk& a, const Walk& b) { return a.length() < b.length(); });
  return walks;
}

}  // namespace swalk
