#include "swalk/suites.hpp"

#include <algorithm>

#include "swalk/realize.hpp"
#include "swalk/reference.hpp"

namespace swalk {

namespace {

constexpr std::size_t max_samples = 5;

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.instances;
  if (ok) return;
  ++r.failures;
  if (r.samples.size() < max_samples) r.samples.push_back(what);
}

std::string where(const Signature& sig) { return describe_graph(sig.graph()) + " sigma=[" + to_string(sig) + "]"; }

std::string where(const Signature& sig, VertexIndex v0) { return where(sig) + " v0=" + sig.graph().vertex_id(v0); }

std::string first_line(const CheckReport& r) {
  std::string s = r.property + ": " + std::string(to_string(r.verdict));
  if (r.witness) s += " (" + r.witness->identity + ")";
  return s;
}

// Every signature-induced oracle, then every counterexample oracle.
template <class Fn>
void for_each_corpus_oracle(const std::vector<GraphPtr>& corpus, Fn&& fn) {
  for (const auto& g : corpus)
    for (const auto& sig : enumerate_signatures(g)) {
      fn(WalkSetOracle::signature_induced(sig), where(sig));
      for (std::size_t v = 0; v < g->vertex_count(); ++v)
        if (in_unbalanced_component(sig, vertex_at(v)))
          fn(build_section2_oracle(sig, vertex_at(v)), "section2 " + where(sig, vertex_at(v)));
    }
}

}  // namespace

std::string describe_graph(const Multigraph& g) {
  std::string s = "V={";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) s += (v ? "," : "") + g.vertex_id(vertex_at(v));
  s += "} E={";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(edge_at(e));
    s += (e ? "," : "") + g.edge_id(edge_at(e)) + ":" + g.vertex_id(a) + "-" + g.vertex_id(b);
  }
  return s + "}";
}

SuiteResult run_forward_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "theorem-nc forward"};
  for (const auto& g : corpus)
    for (const auto& sig : enumerate_signatures(g)) {
      const auto oracle = WalkSetOracle::signature_induced(sig);
      const auto rot = check_rotation_closed(oracle, bounds.max_len);
      const auto three = check_exclusive_3walk(oracle, bounds.factor_len);
      record(r, rot.passed() && three.passed(), where(sig) + ": " + first_line(rot) + "; " + first_line(three));
    }
  return r;
}

SuiteResult run_roundtrip_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "theorem-nc round-trip"};
  std::uint64_t unbalanced_connected = 0;
  for (const auto& g : corpus) {
    const auto labels = component_labels(*g);
    const bool connected = std::all_of(labels.begin(), labels.end(), [](std::size_t l) { return l == 0; });
    for (const auto& sig : enumerate_signatures(g)) {
      const auto oracle = WalkSetOracle::signature_induced(sig);
      const auto result = decide_realizable(oracle, bounds.verify_len);
      bool ok = result.verdict == Realizability::realizable_at_bound && result.signature;
      std::string why = "not realizable";
      if (ok) {
        const auto verified = verify_realization(*result.signature, oracle, bounds.verify_len);
        ok = verified.passed();
        why = first_line(verified);
      }
      if (ok) {
        ok = switching_equivalent(*result.signature, sig).has_value();
        why = "reconstructed [" + to_string(*result.signature) + "] is not switching equivalent";
        if (connected && !is_balanced(sig)) ++unbalanced_connected;
      }
      record(r, ok, where(sig) + ": " + why);
    }
  }
  r.counters.emplace_back("unbalanced connected instances", unbalanced_connected);
  return r;
}

SuiteResult run_consequences_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "prop7"};
  std::uint64_t oracles = 0;
  for_each_corpus_oracle(corpus, [&](const WalkSetOracle& oracle, const std::string& label) {
    ++oracles;
    if (!check_exclusive_3walk(oracle, bounds.factor_len).passed()) return;
    const auto c = check_three_walk_consequences(oracle, 2 * bounds.factor_len);
    record(r, c.passed(), label + ": " + first_line(c));
  });
  r.counters.emplace_back("oracles examined", oracles);
  r.counters.emplace_back("oracles meeting the 3-walk hypothesis", r.instances);
  return r;
}

SuiteResult run_conjugation_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "prop8"};
  std::uint64_t oracles = 0;
  for_each_corpus_oracle(corpus, [&](const WalkSetOracle& oracle, const std::string& label) {
    ++oracles;
    if (!check_rotation_closed(oracle, bounds.max_len).passed()) return;
    if (!check_exclusive_3walk(oracle, bounds.factor_len).passed()) return;
    const auto c = check_conjugation_invariance(oracle, bounds.walk_bound, bounds.prefix_bound);
    record(r, c.passed(), label + ": " + first_line(c));
  });
  r.counters.emplace_back("oracles examined", oracles);
  r.counters.emplace_back("oracles meeting both hypotheses", r.instances);
  return r;
}

SuiteResult run_switching_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "switching"};
  for (const auto& g : corpus) {
    const auto sigs = enumerate_signatures(g);
    const auto n = g->vertex_count();
    for (const auto& sig : sigs) {
      const auto oracle = WalkSetOracle::signature_induced(sig);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<VertexIndex> set;
        for (std::size_t v = 0; v < n; ++v)
          if ((mask >> v) & 1U) set.push_back(vertex_at(v));
        const auto switched = apply_switching(sig, set);
        const auto check = verify_realization(switched, oracle, bounds.verify_len);
        record(r, check.passed() && apply_switching(switched, set) == sig,
               where(sig) + " switched at mask " + std::to_string(mask) + ": " + first_line(check));
      }
      for (const auto& other : sigs) {
        const auto fast = switching_equivalent(sig, other);
        const auto slow = reference::switching_equivalent(sig, other);
        bool ok = fast.has_value() == slow.has_value();
        if (ok && fast) ok = apply_switching(sig, *fast) == other;
        record(r, ok, where(sig) + " vs [" + to_string(other) + "]: cut test and exhaustive search disagree");
      }
    }
  }
  return r;
}

SuiteResult run_counterexample_family_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds) {
  SuiteResult r{.name = "counterexample-family"};
  std::uint64_t lone_vertex = 0;
  for (const auto& g : corpus) {
    const auto labels = component_labels(*g);
    for (const auto& sig : enumerate_signatures(g)) {
      for (std::size_t v = 0; v < g->vertex_count(); ++v) {
        const auto v0 = vertex_at(v);
        if (!in_unbalanced_component(sig, v0)) continue;
        const auto oracle = build_section2_oracle(sig, v0);
        const auto three = check_exclusive_3walk(oracle, bounds.factor_len);
        const auto rot = check_rotation_closed(oracle, bounds.max_len);
        const auto refuted = exhaustive_refute(oracle, bounds.max_len);
        const bool ok = three.passed() && rot.failed() && refuted.all_refuted();
        if (!ok && std::count(labels.begin(), labels.end(), labels[v]) == 1) ++lone_vertex;
        record(r, ok,
               where(sig, v0) + ": " + first_line(three) + "; " + first_line(rot) + "; " +
                   std::to_string(refuted.unrefuted().size()) + " signatures unrefuted");
      }
    }
  }
  r.counters.emplace_back("failures where v0 is alone in its component", lone_vertex);
  return r;
}

std::vector<std::string_view> suite_names() {
  return {"theorem-nc", "prop7", "prop8", "switching", "counterexample-family"};
}

std::vector<SuiteResult> run_named_suite(std::string_view name, const std::vector<GraphPtr>& corpus,
                                         const SuiteBounds& bounds) {
  if (name == "theorem-nc") return {run_forward_suite(corpus, bounds), run_roundtrip_suite(corpus, bounds)};
  if (name == "prop7") return {run_consequences_suite(corpus, bounds)};
  if (name == "prop8") return {run_conjugation_suite(corpus, bounds)};
  if (name == "switching") return {run_switching_suite(corpus, bounds)};
  if (name == "counterexample-family") return {run_counterexample_family_suite(corpus, bounds)};
  throw GraphError("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace swalk
