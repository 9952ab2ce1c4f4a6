#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "swalk/document.hpp"

using namespace swalk;

namespace {

const char* triangle_text = R"({
  "version": 1,
  "graph": {"vertices": ["v0", "v1", "v2"],
            "edges": [{"id": "e01", "ends": ["v0", "v1"]},
                      {"id": "e12", "ends": ["v1", "v2"]},
                      {"id": "e20", "ends": ["v2", "v0"]}]},
  "signature": {"e01": "-", "e12": "+", "e20": "+"}
})";

std::string error_where(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("parse the triangle") {
  auto doc = parse_document(triangle_text);
  CHECK(doc.graph->vertex_count() == 3);
  CHECK(doc.graph->edge_count() == 3);
  REQUIRE(doc.signature);
  CHECK(to_string(*doc.signature) == "e01:- e12:+ e20:+");
}

TEST_CASE("degenerate document") {
  auto doc = parse_document(R"({"version": 1, "graph": {"vertices": [], "edges": []}})");
  CHECK(doc.graph->vertex_count() == 0);
  CHECK_FALSE(doc.signature);
}

TEST_CASE("diagnostics point at the problem") {
  CHECK(error_where("{\n  \"version\": 1,\n  oops\n}").rfind("line 3", 0) == 0);
  CHECK(error_where(R"({"version": 1, "graph": {"vertices": [], "edges": []}, "extra": 0})") == "/extra");
  CHECK(error_where(R"({"version": 2, "graph": {"vertices": [], "edges": []}})") == "/version");
  CHECK(error_where(R"({"version": 1, "graph": {"vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "b"]}]}})")
            .rfind("/graph/edges/0", 0) == 0);
  std::string walk = R"({"version": 1,
    "graph": {"vertices": ["v0", "v1", "v2"],
              "edges": [{"id": "e01", "ends": ["v0", "v1"]}, {"id": "e12", "ends": ["v1", "v2"]}]},
    "walks": [{"start": "v0", "edges": ["e12"]}]})";
  try {
    parse_document(walk);
    FAIL("expected DocumentError");
  } catch (const DocumentError& e) {
    CHECK(e.where() == "/walks/0/edges/0");
    CHECK(std::string(e.what()).find("e12") != std::string::npos);
  }
  CHECK(error_where(R"({"version": 1, "graph": {"vertices": ["v0"], "edges": [{"id": "e", "ends": ["v0", "v0"]}]},
    "signature": {}})")
            .rfind("/signature", 0) == 0);
  CHECK(error_where(R"({"version": 1, "graph": {"vertices": [], "edges": []},
    "walkset": {"flavor": "explicit", "members": []}})")
            .rfind("/walkset", 0) == 0);
}

TEST_CASE("serialization round trip") {
  std::ifstream in(std::string(SWALK_DATA_DIR) + "/triangle.json");
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = parse_document(buf.str());
  auto text = serialize_document(doc);
  auto again = parse_document(text);
  CHECK(serialize_document(again) == text);
  REQUIRE(again.walkset);
  CHECK(again.walkset->flavor == OracleFlavor::section2);
  CHECK(again.walks.size() == 1);
  CHECK(text.back() == '\n');
}

TEST_CASE("make_oracle overrides") {
  auto doc = load_document(std::string(SWALK_DATA_DIR) + "/triangle.json");
  CHECK(make_oracle(doc).flavor() == OracleFlavor::section2);
  CHECK(make_oracle(doc, OracleFlavor::signature).flavor() == OracleFlavor::signature);
  auto o = make_oracle(doc, std::nullopt, std::string("v1"));
  CHECK(doc.graph->vertex_id(*o.v0()) == "v1");
  CHECK_THROWS(make_oracle(doc, std::nullopt, std::string("v9")));
}
