#include <doctest.h>

#include "helpers.hpp"
#include "swalk/checks.hpp"
#include "swalk/realize.hpp"
#include "swalk/reference.hpp"

using namespace swalk;
using namespace swalk::testing;

namespace {

std::vector<WalkSetOracle> small_oracles() {
  std::vector<WalkSetOracle> out;
  for (const auto& g : generate_corpus({.max_vertices = 3, .max_edges = 3}))
    for (const auto& sig : enumerate_signatures(g)) {
      out.push_back(WalkSetOracle::signature_induced(sig));
      for (std::size_t v = 0; v < g->vertex_count(); ++v)
        if (in_unbalanced_component(sig, vertex_at(v))) out.push_back(build_section2_oracle(sig, vertex_at(v)));
    }
  return out;
}

}  // namespace

TEST_CASE("triangle counterexample: 3-walk holds, rotation closure fails") {
  auto g = triangle_graph();
  auto o = build_section2_oracle(sig_of(g, "-++"), vx(g, "v0"));
  auto three = check_exclusive_3walk(o, 3);
  CHECK(three.passed());
  CHECK(three.checked > 0);
  auto rot = check_rotation_closed(o, 3);
  REQUIRE(rot.failed());
  auto d0 = walk_of(g, "v0", {"e01", "e12", "e20"});
  CHECK(rot.witness->walks[0].walk == d0);
  CHECK(rot.witness->walks[1].walk == rotate(d0, 1));
  CHECK(check_rotation_closed(WalkSetOracle::signature_induced(sig_of(g, "-++")), 6).passed());
}

TEST_CASE("fast kernels agree with the reference versions") {
  for (const auto& o : small_oracles()) {
    auto fast = check_exclusive_3walk(o, 2);
    auto slow = reference::check_exclusive_3walk(o, 2);
    REQUIRE(fast.verdict == slow.verdict);
    CHECK(fast.checked == slow.checked);
    auto frot = check_rotation_closed(o, 4);
    auto srot = reference::check_rotation_closed(o, 4);
    REQUIRE(frot.verdict == srot.verdict);
    if (frot.failed()) {
      CHECK(frot.witness->walks[0].walk == srot.witness->walks[0].walk);
      CHECK(frot.witness->walks[1].walk == srot.witness->walks[1].walk);
    }
  }
}

TEST_CASE("3-walk failure carries the three walks and the identity") {
  auto g = triangle_graph();
  auto bf = walk_of(g, "v0", {"e01", "e01"});
  auto o = WalkSetOracle::explicit_set(g, {bf}, 2);
  auto r = check_exclusive_3walk(o, 1);
  REQUIRE(r.failed());
  auto step = walk_of(g, "v0", {"e01"});
  const auto& w = r.witness->walks;
  REQUIRE(w.size() >= 3);
  CHECK(w[0].walk == step);
  CHECK(w[1].walk == step);
  CHECK(w[2].walk == step);
  CHECK(r.witness->identity.find("= -") != std::string::npos);
  auto slow = reference::check_exclusive_3walk(o, 1);
  REQUIRE(slow.failed());
  CHECK(slow.witness->walks[0].walk == step);
}

TEST_CASE("3-walk check is inconclusive past an explicit bound") {
  auto g = triangle_graph();
  auto o = WalkSetOracle::explicit_set(g, {}, 2);
  CHECK(check_exclusive_3walk(o, 2).verdict == Verdict::inconclusive);
  CHECK(check_exclusive_3walk(o, 1).passed());
}

TEST_CASE("consequences: a trivial member fails item (i)") {
  auto g = triangle_graph();
  auto o = WalkSetOracle::explicit_set(g, {Walk(*g, vx(g, "v0"))}, 6);
  auto r = check_three_walk_consequences(o, 6);
  REQUIRE(r.failed());
  REQUIRE(r.parts.size() == 4);
  CHECK(r.parts[0].failed());
}

TEST_CASE("consequences and conjugation on signature and counterexample sets") {
  auto g = triangle_graph();
  auto sig = WalkSetOracle::signature_induced(sig_of(g, "-++"));
  auto cons = check_three_walk_consequences(sig, 6);
  CHECK(cons.passed());
  CHECK(cons.parts.size() == 4);
  CHECK(check_conjugation_invariance(sig, 4, 2).passed());

  auto sec = build_section2_oracle(sig_of(g, "-++"), vx(g, "v0"));
  CHECK(check_three_walk_consequences(sec, 6).passed());
  auto conj = check_conjugation_invariance(sec, 3, 1);
  REQUIRE(conj.failed());
  CHECK(conj.witness->walks[0].walk == walk_of(g, "v1", {"e01"}));
  CHECK(conj.witness->walks[1].walk == walk_of(g, "v0", {"e01", "e12", "e20"}));
}

TEST_CASE("checks are deterministic across thread counts") {
  auto g = triangle_graph();
  auto o = WalkSetOracle::explicit_set(g, {walk_of(g, "v0", {"e01", "e01"})}, 4);
  auto a = check_rotation_closed(o, 4);
  auto b = check_rotation_closed(o, 4);
  CHECK(a.checked == b.checked);
  REQUIRE(a.failed());
  CHECK(a.witness->walks[0].walk == b.witness->walks[0].walk);
}
