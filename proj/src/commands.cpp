#include "swalk/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "swalk/corpus.hpp"
#include "swalk/document.hpp"
#include "swalk/realize.hpp"
#include "swalk/report.hpp"
#include "swalk/suites.hpp"

namespace swalk {

using nlohmann::json;

namespace {

struct Options {
  std::string graph;
  std::string walkset;
  std::string v0;
  std::size_t max_len = 6;
  std::size_t factor_len = 3;
  std::size_t verify_len = 6;
  std::size_t max_vertices = 3;
  std::size_t max_edges = 4;
  std::string suite = "theorem-nc";
  std::string format = "text";
  bool seedless = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--seedless", o.seedless, "Reserved; rejected (no command uses randomness)");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

void add_walkset(CLI::App* cmd, Options& o, bool graph_required = true) {
  auto* g = cmd->add_option("--graph", o.graph, "Scenario document (JSON)");
  if (graph_required) g->required();
  cmd->add_option("--walkset", o.walkset, "Walk set flavor: signature | explicit | section2")
      ->check(CLI::IsMember({"signature", "explicit", "section2"}));
  cmd->add_option("--v0", o.v0, "Distinguished vertex for the section2 walk set");
}

// Checks that a bound stays in the range the enumerators are meant for.
void check_bound(const char* flag, std::size_t value) {
  if (value > 64) throw CapError(std::string(flag) + " " + std::to_string(value) + " exceeds the cap of 64");
}

WalkSetOracle oracle_from(const Document& doc, const Options& o) {
  std::optional<OracleFlavor> flavor;
  if (!o.walkset.empty()) flavor = parse_flavor(o.walkset);
  std::optional<std::string> v0;
  if (!o.v0.empty()) v0 = o.v0;
  return make_oracle(doc, flavor, v0);
}

std::string header(const std::string& command, const Options& o, const Multigraph& g, const std::string& walkset,
                   const std::string& bounds) {
  std::string h = "swalk " + command + "\n";
  h += "graph: " + (o.graph.empty() ? std::string("(built-in triangle)") : o.graph) + " (" +
       std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges)\n";
  if (!walkset.empty()) h += "walk set: " + walkset + "\n";
  h += "bounds: " + bounds + "\n";
  return h;
}

json header_json(const std::string& command, const Options& o, const Multigraph& g, const std::string& walkset,
                 const std::string& bounds) {
  return {{"command", command},
          {"graph", o.graph.empty() ? std::string("(built-in triangle)") : o.graph},
          {"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"walkset", walkset},
          {"bounds", bounds}};
}

int verdict_exit(const std::vector<CheckReport>& reports) {
  if (std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); })) return exit_fail;
  if (std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::inconclusive; }))
    return exit_usage;
  return exit_pass;
}

int cmd_check(const Options& o, std::ostream& out) {
  check_bound("--max-len", o.max_len);
  check_bound("--factor-len", o.factor_len);
  const auto doc = load_document(o.graph);
  const auto oracle = oracle_from(doc, o);
  const auto prefix_bound = o.max_len / 3;
  const auto walk_bound = o.max_len - prefix_bound;
  const auto bounds = "max-len " + std::to_string(o.max_len) + ", factor-len " + std::to_string(o.factor_len) +
                      ", conjugation walk-bound " + std::to_string(walk_bound) + " prefix-bound " +
                      std::to_string(prefix_bound);

  std::vector<CheckReport> reports{check_rotation_closed(oracle, o.max_len),
                                   check_exclusive_3walk(oracle, o.factor_len),
                                   check_three_walk_consequences(oracle, o.max_len),
                                   check_conjugation_invariance(oracle, walk_bound, prefix_bound)};
  const int code = verdict_exit(reports);
  if (o.format == "json") {
    json j = header_json("check", o, oracle.graph(), oracle.describe(), bounds);
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(render_json(r));
    j["exit"] = code;
    out << j.dump(2) << "\n";
  } else {
    out << header("check", o, oracle.graph(), oracle.describe(), bounds);
    for (const auto& r : reports) out << render_text(r);
  }
  return code;
}

int cmd_members(const Options& o, std::ostream& out) {
  check_bound("--max-len", o.max_len);
  const auto doc = load_document(o.graph);
  const auto oracle = oracle_from(doc, o);
  const auto members = list_members(oracle, o.max_len);
  const auto bounds = "max-len " + std::to_string(o.max_len);
  if (o.format == "json") {
    json j = header_json("members", o, oracle.graph(), oracle.describe(), bounds);
    j["members"] = json::array();
    for (const auto& w : members) j["members"].push_back(walk_to_json(w));
    j["count"] = members.size();
    out << j.dump(2) << "\n";
  } else {
    out << header("members", o, oracle.graph(), oracle.describe(), bounds);
    out << members.size() << " member walks\n";
    for (const auto& w : members) out << "  " << to_string(w) << "\n";
  }
  return exit_pass;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  check_bound("--verify-len", o.verify_len);
  const auto doc = load_document(o.graph);
  const auto oracle = oracle_from(doc, o);
  const auto result = decide_realizable(oracle, o.verify_len);
  const auto bounds = "verify-len " + std::to_string(o.verify_len);
  if (o.format == "json") {
    json j = header_json("reconstruct", o, oracle.graph(), oracle.describe(), bounds);
    j["result"] = render_json(result);
    out << j.dump(2) << "\n";
  } else {
    out << header("reconstruct", o, oracle.graph(), oracle.describe(), bounds);
    out << render_text(result);
  }
  return result.verdict == Realizability::realizable_at_bound ? exit_pass : exit_fail;
}

int cmd_refute(const Options& o, std::ostream& out) {
  check_bound("--max-len", o.max_len);
  const auto doc = load_document(o.graph);
  const auto oracle = oracle_from(doc, o);
  const auto refutation = exhaustive_refute(oracle, o.max_len);
  const auto bounds = "max-len " + std::to_string(o.max_len);
  if (o.format == "json") {
    json j = header_json("refute", o, oracle.graph(), oracle.describe(), bounds);
    j["refutation"] = render_json(refutation);
    out << j.dump(2) << "\n";
  } else {
    out << header("refute", o, oracle.graph(), oracle.describe(), bounds);
    out << render_text(refutation);
  }
  return refutation.all_refuted() ? exit_fail : exit_pass;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
  check_bound("--max-len", o.max_len);
  check_bound("--factor-len", o.factor_len);
  Document doc;
  if (o.graph.empty()) {
    doc.graph = triangle_graph();
    doc.signature = triangle_counterexample_signature(doc.graph);
  } else {
    doc = load_document(o.graph);
  }
  if (!doc.signature) throw DocumentError("/signature", "the counterexample needs a signature");
  Options forced = o;
  forced.walkset = "section2";
  const auto oracle = oracle_from(doc, forced);
  const auto base = WalkSetOracle::signature_induced(*doc.signature);

  const auto base_three = check_exclusive_3walk(base, o.factor_len);
  const auto three = check_exclusive_3walk(oracle, o.factor_len);
  const auto rot = check_rotation_closed(oracle, o.max_len);
  const auto refutation = exhaustive_refute(oracle, o.max_len);
  const bool reproduced = base_three.passed() && three.passed() && rot.failed() && refutation.all_refuted();
  const auto bounds = "max-len " + std::to_string(o.max_len) + ", factor-len " + std::to_string(o.factor_len);

  if (o.format == "json") {
    json j = header_json("counterexample", o, oracle.graph(), oracle.describe(), bounds);
    j["negative_walks_three_walk"] = render_json(base_three);
    j["three_walk"] = render_json(three);
    j["rotation"] = render_json(rot);
    j["refutation"] = render_json(refutation);
    j["reproduced"] = reproduced;
    out << j.dump(2) << "\n";
  } else {
    out << header("counterexample", o, oracle.graph(), oracle.describe(), bounds);
    out << "(a) negative closed walks of the signature:\n" << render_text(base_three, 2);
    out << "(b) counterexample set:\n" << render_text(three, 2);
    out << "(c) counterexample set:\n" << render_text(rot, 2);
    out << "no signature realizes the set:\n" << render_text(refutation);
    out << (reproduced ? "counterexample reproduced\n" : "counterexample NOT reproduced\n");
  }
  return reproduced ? exit_pass : exit_fail;
}

int cmd_corpus(const Options& o, std::ostream& out) {
  check_bound("--max-len", o.max_len);
  check_bound("--factor-len", o.factor_len);
  check_bound("--verify-len", o.verify_len);
  CorpusParams params;
  params.max_vertices = o.max_vertices;
  params.max_edges = o.max_edges;
  const auto corpus = generate_corpus(params);
  SuiteBounds b;
  b.max_len = o.max_len;
  b.factor_len = o.factor_len;
  b.verify_len = o.verify_len;
  b.prefix_bound = o.max_len / 3;
  b.walk_bound = o.max_len - b.prefix_bound;
  const auto results = run_named_suite(o.suite, corpus, b);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  const auto bounds = "max-len " + std::to_string(b.max_len) + ", factor-len " + std::to_string(b.factor_len) +
                      ", verify-len " + std::to_string(b.verify_len) + ", conjugation walk-bound " +
                      std::to_string(b.walk_bound) + " prefix-bound " + std::to_string(b.prefix_bound);
  const auto corpus_line = std::to_string(corpus.size()) + " graphs (<= " + std::to_string(o.max_vertices) +
                           " vertices, <= " + std::to_string(o.max_edges) + " edges, loops and parallel edges)";
  if (o.format == "json") {
    json j{{"command", "corpus"}, {"suite", o.suite}, {"corpus", corpus_line}, {"bounds", bounds}};
    j["results"] = json::array();
    for (const auto& r : results) j["results"].push_back(render_json(r));
    j["passed"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "swalk corpus\ncorpus: " << corpus_line << "\nsuite: " << o.suite << "\nbounds: " << bounds << "\n";
    for (const auto& r : results) out << render_text(r);
  }
  return ok ? exit_pass : exit_fail;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signed-graph closed-walk verifier", "swalk"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Rotation closure, 3-walk property and its consequences");
  add_walkset(check, o);
  check->add_option("--max-len", o.max_len, "Closed-walk length bound");
  check->add_option("--factor-len", o.factor_len, "Per-factor bound for the 3-walk property");
  add_common(check, o);

  auto* members = app.add_subcommand("members", "List member walks up to a length");
  add_walkset(members, o);
  members->add_option("--max-len", o.max_len, "Closed-walk length bound");
  add_common(members, o);

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct and verify a realizing signature");
  add_walkset(reconstruct, o);
  reconstruct->add_option("--verify-len", o.verify_len, "Verification bound");
  add_common(reconstruct, o);

  auto* refute = app.add_subcommand("refute", "Refute every signature as a realization");
  add_walkset(refute, o);
  refute->add_option("--max-len", o.max_len, "Closed-walk length bound");
  add_common(refute, o);

  auto* counter = app.add_subcommand("counterexample", "Build and verify the non-rotation-closed counterexample");
  add_walkset(counter, o, false);
  counter->add_option("--max-len", o.max_len, "Closed-walk length bound");
  counter->add_option("--factor-len", o.factor_len, "Per-factor bound for the 3-walk property");
  add_common(counter, o);

  auto* corpus = app.add_subcommand("corpus", "Run a named suite over an exhaustive graph corpus");
  corpus->add_option("--max-vertices", o.max_vertices, "Largest vertex count");
  corpus->add_option("--max-edges", o.max_edges, "Largest edge count");
  corpus->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"theorem-nc", "prop7", "prop8", "switching", "counterexample-family"}));
  corpus->add_option("--max-len", o.max_len, "Closed-walk length bound");
  corpus->add_option("--factor-len", o.factor_len, "Per-factor bound for the 3-walk property");
  corpus->add_option("--verify-len", o.verify_len, "Verification bound");
  add_common(corpus, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (o.seedless) {
    err << "error: --seedless is reserved; no command uses randomness\n";
    return exit_usage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (members->parsed()) return cmd_members(o, out);
    if (reconstruct->parsed()) return cmd_reconstruct(o, out);
    if (refute->parsed()) return cmd_refute(o, out);
    if (counter->parsed()) return cmd_counterexample(o, out);
    if (corpus->parsed()) return cmd_corpus(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace swalk
