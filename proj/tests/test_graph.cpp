#include <doctest.h>

#include "helpers.hpp"
#include "swalk/reference.hpp"

using namespace swalk;
using namespace swalk::testing;

TEST_CASE("build_graph sorts ids and keeps declared ends") {
  auto g = build_graph({"b", "a"}, {{"y", "b", "a"}, {"x", "a", "a"}});
  CHECK(g->vertex_id(vertex_at(0)) == "a");
  CHECK(g->edge_id(edge_at(0)) == "x");
  CHECK(g->is_loop(edge_at(0)));
  auto [u, v] = g->ends(*g->find_edge("y"));
  CHECK(g->vertex_id(u) == "b");
  CHECK(g->vertex_id(v) == "a");
  CHECK(g->incident(vx(g, "a")).size() == 2);  // loop appears once
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph({"v0", "v0"}, {}), GraphError);
  CHECK_THROWS_AS(build_graph({"v0"}, {{"e", "v0", "v9"}}), GraphError);
  CHECK_THROWS_AS(build_graph({"v0", "v1"}, {{"e", "v0", "v1"}, {"e", "v1", "v0"}}), GraphError);
}

TEST_CASE("empty graph is valid") {
  auto g = build_graph({}, {});
  CHECK(g->vertex_count() == 0);
  CHECK(enumerate_signatures(g).size() == 1);
  CHECK(is_balanced(Signature::all_plus(g)));
}

TEST_CASE("signature must be total") {
  auto g = triangle_graph();
  CHECK_THROWS(Signature(g, {Sign::plus}));
}

TEST_CASE("switching negates cut edges only") {
  auto g = triangle_graph();
  auto s = sig_of(g, "-++");
  std::vector<VertexIndex> set{vx(g, "v1")};
  auto t = apply_switching(s, set);
  CHECK(to_string(t) == "e01:+ e12:- e20:+");
  auto lg = loop_graph();
  auto ls = sig_of(lg, "-");
  std::vector<VertexIndex> all{vx(lg, "v0")};
  CHECK(apply_switching(ls, all) == ls);
}

TEST_CASE("signature enumeration order: first edge most significant, plus is zero") {
  auto g = triangle_graph();
  CHECK(to_string(signature_at(g, 0)) == "e01:+ e12:+ e20:+");
  CHECK(to_string(signature_at(g, 1)) == "e01:+ e12:+ e20:-");
  CHECK(to_string(signature_at(g, 4)) == "e01:- e12:+ e20:+");
  CHECK(enumerate_signatures(g).size() == 8);
  CHECK_THROWS_AS(signature_count(*g, 2), CapError);
}

TEST_CASE("balance and components") {
  auto g = build_graph({"v0", "v1", "v2"}, {{"e01", "v0", "v1"}, {"e22", "v2", "v2"}});
  auto s = sig_of(g, "--");
  CHECK(component_labels(*g) == std::vector<std::size_t>{0, 0, 2});
  CHECK_FALSE(in_unbalanced_component(s, vx(g, "v0")));
  CHECK(in_unbalanced_component(s, vx(g, "v2")));
  CHECK_FALSE(is_balanced(s));
  auto p = balance_potentials(s);
  REQUIRE(p[0]);
  CHECK(*p[0] == Sign::plus);
  CHECK(*p[1] == Sign::minus);
  CHECK_FALSE(p[2]);
}

TEST_CASE("switching equivalence on the triangle") {
  auto g = triangle_graph();
  auto a = sig_of(g, "-++");
  auto b = sig_of(g, "+-+");
  auto s = switching_equivalent(a, b);
  REQUIRE(s);
  CHECK(apply_switching(a, *s) == b);
  CHECK(s->size() == 1);
  CHECK_FALSE(switching_equivalent(a, sig_of(g, "+++")));
  auto other = triangle_graph();
  CHECK_THROWS_AS(switching_equivalent(a, sig_of(other, "-++")), GraphError);
}

TEST_CASE("switching equivalence agrees with exhaustive search over the corpus") {
  for (const auto& g : generate_corpus({.max_vertices = 3, .max_edges = 3})) {
    const auto sigs = enumerate_signatures(g);
    for (const auto& a : sigs)
      for (const auto& b : sigs) {
        const auto fast = switching_equivalent(a, b);
        const auto slow = reference::switching_equivalent(a, b);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) CHECK(apply_switching(a, *fast) == b);
      }
  }
}
