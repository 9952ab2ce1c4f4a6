#include <doctest.h>

#include <functional>
#include <set>

#include "helpers.hpp"

using namespace swalk;
using namespace swalk::testing;

namespace {

// Walks from x to y by trying every edge sequence of length <= len.
std::set<std::string> brute_force_walks(const GraphPtr& g, VertexIndex x, VertexIndex y, std::size_t len) {
  std::set<std::string> out;
  std::vector<EdgeIndex> seq;
  std::function<void()> grow = [&] {
    try {
      auto w = make_walk(*g, x, seq);
      if (w.end() == y) out.insert(to_string(w));
    } catch (const WalkError&) {
      return;  // no extension of a broken prefix chains either
    }
    if (seq.size() == len) return;
    for (std::size_t e = 0; e < g->edge_count(); ++e) {
      seq.push_back(edge_at(e));
      grow();
      seq.pop_back();
    }
  };
  grow();
  return out;
}

}  // namespace

TEST_CASE("make_walk reports the failing position") {
  auto g = triangle_graph();
  try {
    walk_of(g, "v0", {"e12"});
    FAIL("expected WalkError");
  } catch (const WalkError& e) {
    CHECK(e.position() == 1);
    CHECK(std::string(e.what()).find("e12") != std::string::npos);
  }
  try {
    walk_of(g, "v0", {"e01", "e20"});
    FAIL("expected WalkError");
  } catch (const WalkError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(walk_of(g, "v0", {"nope"}), WalkError);
  CHECK_THROWS_AS(walk_of(g, "v9", {}), WalkError);
}

TEST_CASE("concat, inverse, rotate") {
  auto g = triangle_graph();
  auto p = walk_of(g, "v0", {"e01"});
  auto q = walk_of(g, "v1", {"e12"});
  CHECK(to_string(concat(p, q)) == "(v0,e01,v1,e12,v2)");
  CHECK(to_string(inverse(concat(p, q))) == "(v2,e12,v1,e01,v0)");
  CHECK_THROWS_AS(concat(q, p), WalkError);

  auto d0 = walk_of(g, "v0", {"e01", "e12", "e20"});
  CHECK(to_string(rotate(d0, 1)) == "(v1,e12,v2,e20,v0,e01,v1)");
  CHECK(rotate(d0, 0) == d0);
  CHECK_THROWS_AS(rotate(d0, 3), WalkError);
  CHECK_THROWS_AS(rotate(p, 0), WalkError);
  CHECK(rotations(d0).size() == 3);
  CHECK(canonical_rotation(rotate(d0, 2)) == d0);

  auto back_forth = walk_of(g, "v0", {"e01", "e01"});
  CHECK(rotations(back_forth).size() == 2);
  Walk trivial(*g, vx(g, "v1"));
  CHECK(rotations(trivial).size() == 1);
}

TEST_CASE("loop has one orientation") {
  auto g = loop_graph();
  auto w = walk_of(g, "v0", {"e00", "e00"});
  CHECK(inverse(w) == w);
  CHECK(rotations(w).size() == 1);
  CHECK(count_walks(*g, vx(g, "v0"), vx(g, "v0"), 3) == 4);
}

TEST_CASE("walk enumeration matches brute force") {
  auto t = triangle_graph();
  auto v0 = vx(t, "v0");
  auto walks = enumerate_walks(*t, v0, v0, 3);
  CHECK(walks.size() == 5);
  CHECK(walks.front().trivial());
  CHECK(count_walks(*t, v0, v0, 3) == 5);

  std::vector<GraphPtr> graphs{t, loop_graph(), digon_graph()};
  for (const auto& g : generate_corpus({.min_vertices = 2, .max_vertices = 2, .max_edges = 3})) graphs.push_back(g);
  for (const auto& g : graphs)
    for (std::size_t x = 0; x < g->vertex_count(); ++x)
      for (std::size_t y = 0; y < g->vertex_count(); ++y) {
        auto got = enumerate_walks(*g, vertex_at(x), vertex_at(y), 4);
        std::set<std::string> names;
        for (const auto& w : got) names.insert(to_string(w));
        CHECK(names.size() == got.size());
        CHECK(names == brute_force_walks(g, vertex_at(x), vertex_at(y), 4));
        CHECK(count_walks(*g, vertex_at(x), vertex_at(y), 4) == got.size());
      }
}

TEST_CASE("enumeration cap names the largest length that fits") {
  auto t = triangle_graph();
  auto v0 = vx(t, "v0");
  try {
    enumerate_walks(*t, v0, v0, 10, {.max_walks = 5});
    FAIL("expected CapError");
  } catch (const CapError& e) {
    CHECK(std::string(e.what()).find("largest length within the cap: 3") != std::string::npos);
  }
}

TEST_CASE("shortest_first is stable") {
  auto t = triangle_graph();
  auto all = enumerate_closed_walks(*t, 3);
  auto sorted = shortest_first(all);
  REQUIRE(sorted.size() == all.size());
  for (std::size_t i = 1; i < sorted.size(); ++i) CHECK(sorted[i - 1].length() <= sorted[i].length());
  CHECK(sorted[0] == all[0]);
}

TEST_CASE("sign laws over triangle walks") {
  auto g = triangle_graph();
  auto sig = sig_of(g, "-++");
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      for (const auto& a : enumerate_walks(*g, vertex_at(x), vertex_at(y), 3)) {
        CHECK(sign_of_walk(sig, inverse(a)) == sign_of_walk(sig, a));
        for (std::size_t z = 0; z < 3; ++z)
          for (const auto& b : enumerate_walks(*g, vertex_at(y), vertex_at(z), 2))
            CHECK(sign_of_walk(sig, concat(a, b)) == sign_of_walk(sig, a) * sign_of_walk(sig, b));
      }
  CHECK(sign_of_walk(sig, walk_of(g, "v1", {"e12", "e20", "e01"})) == Sign::minus);
}
