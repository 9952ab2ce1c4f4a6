#include <doctest.h>

#include "helpers.hpp"
#include "swalk/realize.hpp"
#include "swalk/walkset.hpp"

using namespace swalk;
using namespace swalk::testing;

TEST_CASE("signature oracle") {
  auto g = triangle_graph();
  auto o = WalkSetOracle::signature_induced(sig_of(g, "-++"));
  CHECK(o.flavor() == OracleFlavor::signature);
  CHECK(o.membership(walk_of(g, "v0", {"e01", "e12", "e20"})) == Membership::in);
  CHECK(o.membership(walk_of(g, "v0", {"e01", "e01"})) == Membership::out);
  CHECK(*sigma_of(o, Walk(*g, vx(g, "v2"))) == Sign::plus);
  CHECK_THROWS_AS(sigma_of(o, walk_of(g, "v0", {"e01"})), WalkError);
  auto other = triangle_graph();
  CHECK_THROWS_AS(sigma_of(o, Walk(*other, vertex_at(0))), GraphError);
}

TEST_CASE("explicit oracle is unknown past its bound") {
  auto g = triangle_graph();
  auto d0 = walk_of(g, "v0", {"e01", "e12", "e20"});
  auto o = WalkSetOracle::explicit_set(g, {d0, d0}, 3);
  CHECK(o.members().size() == 1);
  CHECK(o.membership(d0) == Membership::in);
  CHECK(o.membership(rotate(d0, 1)) == Membership::out);
  CHECK(o.membership(concat(d0, walk_of(g, "v0", {"e01", "e01"}))) == Membership::unknown);
  CHECK_FALSE(sigma_of(o, concat(d0, d0)));
  CHECK_THROWS(WalkSetOracle::explicit_set(g, {walk_of(g, "v0", {"e01"})}, 3));
  CHECK_THROWS(WalkSetOracle::explicit_set(g, {d0}, 2));
  CHECK_THROWS_AS(list_members(o, 4), UnknownMembershipError);
  CHECK(list_members(o, 3).size() == 1);
}

TEST_CASE("section2 oracle drops walks starting at v0") {
  auto g = triangle_graph();
  auto o = build_section2_oracle(sig_of(g, "-++"), vx(g, "v0"));
  auto d0 = walk_of(g, "v0", {"e01", "e12", "e20"});
  CHECK(o.membership(d0) == Membership::out);
  CHECK(o.membership(rotate(d0, 1)) == Membership::in);
  CHECK(*o.v0() == vx(g, "v0"));
  CHECK(list_members(o, 3).size() == 4);
  CHECK(list_members(WalkSetOracle::signature_induced(sig_of(g, "-++")), 3).size() == 6);
}

TEST_CASE("flavor names") {
  CHECK(parse_flavor("explicit") == OracleFlavor::explicit_set);
  CHECK(to_string(OracleFlavor::section2) == "section2");
  CHECK_FALSE(parse_flavor("other"));
}
