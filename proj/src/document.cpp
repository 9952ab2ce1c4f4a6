#include "swalk/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "swalk/realize.hpp"

namespace swalk {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string child(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string child(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

void allow_only(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) throw DocumentError(path.empty() ? "/" : path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) throw DocumentError(child(path, key), "unknown field \"" + key + "\"");
  }
}

const json& require(const json& obj, const std::string& path, std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw DocumentError(child(path, key), "missing required field");
  return *it;
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw DocumentError(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "expected an array");
  return j;
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw DocumentError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

VertexIndex resolve_vertex(const Multigraph& g, const json& j, const std::string& path) {
  const auto id = as_string(j, path);
  auto v = g.find_vertex(id);
  if (!v) throw DocumentError(path, "unknown vertex \"" + id + "\"");
  return *v;
}

Walk parse_walk(const Multigraph& g, const json& j, const std::string& path) {
  allow_only(j, path, {"start", "edges"});
  const auto start_path = child(path, "start");
  const auto start = resolve_vertex(g, require(j, path, "start"), start_path);
  const auto edges_path = child(path, "edges");
  std::vector<std::string> edges;
  if (j.contains("edges")) {
    const auto& arr = as_array(j.at("edges"), edges_path);
    for (std::size_t i = 0; i < arr.size(); ++i) edges.push_back(as_string(arr[i], child(edges_path, i)));
  }
  try {
    return make_walk(g, g.vertex_id(start), edges);
  } catch (const WalkError& e) {
    const auto where = e.position() ? child(edges_path, e.position() - 1) : start_path;
    throw DocumentError(where, e.what());
  }
}

GraphPtr parse_graph(const json& j, const std::string& path) {
  allow_only(j, path, {"vertices", "edges"});
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::set<std::string> seen_vertices, seen_edges;

  const auto vpath = child(path, "vertices");
  if (j.contains("vertices")) {
    const auto& arr = as_array(j.at("vertices"), vpath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto id = as_string(arr[i], child(vpath, i));
      if (!seen_vertices.insert(id).second) throw DocumentError(child(vpath, i), "duplicate vertex id \"" + id + "\"");
      vertices.push_back(std::move(id));
    }
  }
  const auto epath = child(path, "edges");
  if (j.contains("edges")) {
    const auto& arr = as_array(j.at("edges"), epath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto here = child(epath, i);
      allow_only(arr[i], here, {"id", "ends"});
      auto id = as_string(require(arr[i], here, "id"), child(here, "id"));
      if (!seen_edges.insert(id).second) throw DocumentError(child(here, "id"), "duplicate edge id \"" + id + "\"");
      const auto ends_path = child(here, "ends");
      const auto& ends = as_array(require(arr[i], here, "ends"), ends_path);
      if (ends.size() != 2) throw DocumentError(ends_path, "expected exactly two endpoints");
      EdgeSpec spec{std::move(id), as_string(ends[0], child(ends_path, 0)), as_string(ends[1], child(ends_path, 1))};
      for (std::size_t k = 0; k < 2; ++k) {
        const auto& end = k == 0 ? spec.first : spec.second;
        if (!seen_vertices.count(end)) throw DocumentError(child(ends_path, k), "unknown vertex \"" + end + "\"");
      }
      edges.push_back(std::move(spec));
    }
  }
  return build_graph(std::move(vertices), std::move(edges));
}

Signature parse_signature(const GraphPtr& g, const json& j, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path, "expected an object mapping edge ids to \"+\" or \"-\"");
  std::vector<std::optional<Sign>> signs(g->edge_count());
  for (const auto& [key, value] : j.items()) {
    auto e = g->find_edge(key);
    if (!e) throw DocumentError(child(path, key), "unknown edge \"" + key + "\"");
    auto s = value.is_string() ? parse_sign(value.get<std::string>()) : std::nullopt;
    if (!s) throw DocumentError(child(path, key), "sign must be \"+\" or \"-\"");
    signs[index_of(*e)] = s;
  }
  std::vector<Sign> total;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (!signs[i]) throw DocumentError(child(path, g->edge_id(edge_at(i))), "edge has no sign");
    total.push_back(*signs[i]);
  }
  return Signature(g, std::move(total));
}

WalkSetDecl parse_walkset(const GraphPtr& g, const json& j, const std::string& path) {
  allow_only(j, path, {"flavor", "v0", "members", "bound"});
  WalkSetDecl decl;
  const auto fpath = child(path, "flavor");
  auto flavor = parse_flavor(as_string(require(j, path, "flavor"), fpath));
  if (!flavor) throw DocumentError(fpath, "flavor must be \"signature\", \"explicit\" or \"section2\"");
  decl.flavor = *flavor;
  if (j.contains("v0")) decl.v0 = resolve_vertex(*g, j.at("v0"), child(path, "v0"));
  if (j.contains("bound")) decl.bound = as_count(j.at("bound"), child(path, "bound"));
  if (j.contains("members")) {
    const auto mpath = child(path, "members");
    const auto& arr = as_array(j.at("members"), mpath);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto w = parse_walk(*g, arr[i], child(mpath, i));
      if (!w.closed()) throw DocumentError(child(mpath, i), "walk set member " + to_string(w) + " is not closed");
      if (decl.bound && w.length() > *decl.bound)
        throw DocumentError(child(mpath, i), "member " + to_string(w) + " is longer than the bound");
      decl.members.push_back(std::move(w));
    }
  }
  if (decl.flavor == OracleFlavor::explicit_set && !decl.bound)
    throw DocumentError(child(path, "bound"), "an explicit walk set needs a bound");
  return decl;
}

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(line_column(text, e.byte ? e.byte - 1 : 0), "malformed JSON");
  }
  allow_only(root, "", {"version", "graph", "signature", "walks", "walkset"});

  Document doc;
  const auto& version = require(root, "", "version");
  if (!version.is_number_integer() || version.get<int>() != 1)
    throw DocumentError("/version", "unsupported format version (expected 1)");
  doc.version = 1;

  try {
    doc.graph = parse_graph(require(root, "", "graph"), "/graph");
  } catch (const GraphError& e) {
    throw DocumentError("/graph", e.what());
  }
  if (root.contains("signature")) doc.signature = parse_signature(doc.graph, root.at("signature"), "/signature");
  if (root.contains("walks")) {
    const auto& arr = as_array(root.at("walks"), "/walks");
    for (std::size_t i = 0; i < arr.size(); ++i) doc.walks.push_back(parse_walk(*doc.graph, arr[i], child("/walks", i)));
  }
  if (root.contains("walkset")) doc.walkset = parse_walkset(doc.graph, root.at("walkset"), "/walkset");
  return doc;
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

json walk_to_json(const Walk& walk) {
  return json{{"start", walk.graph().vertex_id(walk.start())}, {"edges", edge_ids(walk)}};
}

json to_json(const Document& doc) {
  const auto& g = *doc.graph;
  json vertices = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.vertex_id(vertex_at(v)));
  json edges = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(edge_at(e));
    edges.push_back({{"id", g.edge_id(edge_at(e))}, {"ends", {g.vertex_id(a), g.vertex_id(b)}}});
  }
  json root{{"version", doc.version}, {"graph", {{"vertices", vertices}, {"edges", edges}}}};
  if (doc.signature) {
    json sig = json::object();
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      sig[g.edge_id(edge_at(e))] = std::string(1, to_char((*doc.signature)[edge_at(e)]));
    root["signature"] = sig;
  }
  if (!doc.walks.empty()) {
    json walks = json::array();
    for (const auto& w : doc.walks) walks.push_back(walk_to_json(w));
    root["walks"] = walks;
  }
  if (doc.walkset) {
    json ws{{"flavor", std::string(to_string(doc.walkset->flavor))}};
    if (doc.walkset->v0) ws["v0"] = g.vertex_id(*doc.walkset->v0);
    if (doc.walkset->bound) ws["bound"] = *doc.walkset->bound;
    if (!doc.walkset->members.empty()) {
      json members = json::array();
      for (const auto& w : doc.walkset->members) members.push_back(walk_to_json(w));
      ws["members"] = members;
    }
    root["walkset"] = ws;
  }
  return root;
}

std::string serialize_document(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

WalkSetOracle make_oracle(const Document& doc, std::optional<OracleFlavor> flavor, std::optional<std::string> v0) {
  const auto chosen = flavor ? *flavor : doc.walkset ? doc.walkset->flavor : OracleFlavor::signature;
  auto need_signature = [&]() -> const Signature& {
    if (!doc.signature) throw DocumentError("/signature", "the " + std::string(to_string(chosen)) +
                                                              " walk set needs a signature");
    return *doc.signature;
  };
  switch (chosen) {
    case OracleFlavor::signature:
      return WalkSetOracle::signature_induced(need_signature());
    case OracleFlavor::explicit_set: {
      if (!doc.walkset || doc.walkset->flavor != OracleFlavor::explicit_set)
        throw DocumentError("/walkset", "an explicit walk set needs \"members\" and \"bound\" in the document");
      return WalkSetOracle::explicit_set(doc.graph, doc.walkset->members, *doc.walkset->bound);
    }
    case OracleFlavor::section2: {
      const auto& sig = need_signature();
      VertexIndex root{};
      if (v0) {
        auto v = doc.graph->find_vertex(*v0);
        if (!v) throw DocumentError("--v0", "unknown vertex \"" + *v0 + "\"");
        root = *v;
      } else if (doc.walkset && doc.walkset->v0) {
        root = *doc.walkset->v0;
      } else if (doc.graph->vertex_count() == 0) {
        throw DocumentError("/graph/vertices", "the section2 walk set needs a vertex v0");
      }
      try {
        return build_section2_oracle(sig, root);
      } catch (const GraphError& e) {
        throw DocumentError(v0 ? "--v0" : "/walkset/v0", e.what());
      }
    }
  }
  throw DocumentError("/walkset/flavor", "unsupported flavor");
}

}  // namespace swalk
