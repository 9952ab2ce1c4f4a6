#include <doctest.h>

#include "helpers.hpp"
#include "swalk/realize.hpp"
#include "swalk/reference.hpp"

using namespace swalk;
using namespace swalk::testing;

TEST_CASE("spanning forest of the triangle") {
  auto g = triangle_graph();
  auto f = build_spanning_forest(g);
  CHECK(f.is_tree_edge(*g->find_edge("e01")));
  CHECK(f.is_tree_edge(*g->find_edge("e20")));
  auto nt = f.non_tree_edges();
  REQUIRE(nt.size() == 1);
  CHECK(g->edge_id(nt[0]) == "e12");
  auto fw = fundamental_walk(f, nt[0]);
  CHECK(to_string(fw) == "(v0,e01,v1,e12,v2,e20,v0)");
  CHECK_THROWS_AS(fundamental_walk(f, *g->find_edge("e01")), GraphError);
}

TEST_CASE("fundamental walks of loops and parallel edges") {
  auto lg = loop_graph();
  auto lf = build_spanning_forest(lg);
  CHECK(to_string(fundamental_walk(lf, edge_at(0))) == "(v0,e00,v0)");
  auto dg = digon_graph();
  auto df = build_spanning_forest(dg);
  CHECK(to_string(fundamental_walk(df, *dg->find_edge("b"))) == "(v0,b,v1,a,v0)");
}

TEST_CASE("reconstruction on the triangle") {
  auto g = triangle_graph();
  auto sig = sig_of(g, "-++");
  auto res = decide_realizable(WalkSetOracle::signature_induced(sig), 6);
  CHECK(res.verdict == Realizability::realizable_at_bound);
  REQUIRE(res.signature);
  CHECK(to_string(*res.signature) == "e01:+ e12:- e20:+");
  CHECK(switching_equivalent(*res.signature, sig));

  auto sec = build_section2_oracle(sig, vx(g, "v0"));
  CHECK(reconstruct_signature(sec) == Signature::all_plus(g));
  auto bad = decide_realizable(sec, 6);
  CHECK(bad.verdict == Realizability::not_realizable);
  REQUIRE(bad.witness);
  CHECK(bad.witness->length() == 3);
  REQUIRE(bad.refutation);
  CHECK(bad.refutation->all_refuted());
}

TEST_CASE("exhaustive refutation") {
  auto g = triangle_graph();
  auto sig = sig_of(g, "-++");
  auto sec = build_section2_oracle(sig, vx(g, "v0"));
  auto r = exhaustive_refute(sec, 6);
  CHECK(r.signatures.size() == 8);
  CHECK(r.all_refuted());
  for (const auto& w : r.witnesses) CHECK(w->length() <= 3);

  // The negative walks of sig are realized by its switching class: four signatures.
  auto own = exhaustive_refute(WalkSetOracle::signature_induced(sig), 6);
  CHECK(own.unrefuted().size() == 4);
  for (auto i : own.unrefuted()) CHECK(switching_equivalent(own.signatures[i], sig));

  auto slow = reference::refute_all(sec, 6);
  REQUIRE(slow.size() == r.witnesses.size());
  for (std::size_t i = 0; i < slow.size(); ++i) CHECK(*slow[i] == *r.witnesses[i]);
}

TEST_CASE("explicit set beyond its bound cannot be decided") {
  auto g = triangle_graph();
  auto o = WalkSetOracle::explicit_set(g, {}, 3);
  CHECK_THROWS_AS(decide_realizable(o, 6), UnknownMembershipError);
  CHECK(decide_realizable(o, 3).verdict == Realizability::realizable_at_bound);
}

TEST_CASE("section2 precondition") {
  auto g = build_graph({"v0", "v1", "v2"}, {{"e01", "v0", "v1"}, {"e22", "v2", "v2"}});
  auto sig = sig_of(g, "+-");
  CHECK_THROWS_AS(build_section2_oracle(sig, vx(g, "v0")), GraphError);
  CHECK_NOTHROW(build_section2_oracle(sig, vx(g, "v2")));
}

TEST_CASE("balance route and scan route agree on the section2 precondition") {
  for (const auto& g : generate_corpus({.max_vertices = 3, .max_edges = 4}))
    for (const auto& sig : enumerate_signatures(g))
      for (std::size_t v = 0; v < g->vertex_count(); ++v)
        CHECK(in_unbalanced_component(sig, vertex_at(v)) ==
              negative_closed_walk_at(sig, vertex_at(v), 2 * g->vertex_count()));
}
