#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "swalk/commands.hpp"

using namespace swalk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string doc = std::string(SWALK_DATA_DIR) + "/triangle.json";

}  // namespace

TEST_CASE("check on the counterexample fails rotation closure") {
  auto r = run({"check", "--graph", doc, "--max-len", "6"});
  CHECK(r.code == exit_fail);
  CHECK(r.out.find("rotation closure: FAIL") != std::string::npos);
  CHECK(r.out.find("exclusive 3-walk: pass") != std::string::npos);
  CHECK(run({"check", "--graph", doc, "--walkset", "signature", "--max-len", "6"}).code == exit_pass);
}

TEST_CASE("members, reconstruct, refute, counterexample") {
  auto m = run({"members", "--graph", doc, "--walkset", "signature", "--max-len", "3", "--format", "json"});
  CHECK(m.code == exit_pass);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j.dump().find("v0") != std::string::npos);

  auto rec = run({"reconstruct", "--graph", doc, "--walkset", "signature"});
  CHECK(rec.code == exit_pass);
  CHECK(rec.out.find("e01:+ e12:- e20:+") != std::string::npos);
  CHECK(run({"reconstruct", "--graph", doc}).code == exit_fail);

  CHECK(run({"refute", "--graph", doc, "--max-len", "6"}).code == exit_fail);
  CHECK(run({"refute", "--graph", doc, "--walkset", "signature", "--max-len", "6"}).code == exit_pass);

  auto c = run({"counterexample"});
  CHECK(c.code == exit_pass);
  CHECK(c.out.find("counterexample reproduced") != std::string::npos);
}

TEST_CASE("json output parses") {
  for (auto cmd : {"check", "refute", "reconstruct"}) {
    auto r = run({cmd, "--graph", doc, "--format", "json"});
    CHECK(nlohmann::json::accept(r.out));
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"check", "--graph", doc, "--bogus"}).code == exit_usage);
  CHECK(run({"check", "--graph", doc, "--seedless"}).code == exit_usage);
  CHECK(run({"check", "--graph", "/no/such/file.json"}).code == exit_usage);
  CHECK(run({"check", "--graph", doc, "--walkset", "weird"}).code == exit_usage);
  CHECK(run({"corpus", "--suite", "nope"}).code == exit_usage);
}

TEST_CASE("output is byte stable") {
  auto a = run({"check", "--graph", doc, "--format", "json"});
  auto b = run({"check", "--graph", doc, "--format", "json"});
  CHECK(a.out == b.out);
}

TEST_CASE("small corpus suite") {
  auto r = run({"corpus", "--max-vertices", "2", "--max-edges", "2", "--suite", "theorem-nc"});
  CHECK(r.code == exit_pass);
}
