// End-to-end runs of the command line tool against emitted example files.
// Each run captures stdout+stderr and the exit code through a shell.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "absolim/io.hpp"
#include "doctest.h"

using namespace absolim;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_doc(const std::string& name, const std::string& text) {
  std::string path = std::string("cli_") + name + ".json";
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

std::string fixture_doc(const std::string& name) {
  return temp_doc(name, emit_document(document_from_fixture(fixture(name))));
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("example listing names every built-in fixture") {
  RunResult r = run_cli("example --list");
  CHECK(r.code == 0);
  for (const Fixture& fx : builtin_fixtures()) CHECK(contains(r.out, fx.name + ":"));
}

TEST_CASE("emitted examples round trip through the tool byte for byte") {
  for (const char* name : {"idempotent-split", "biproduct", "suplat-pair", "burnside-s3"}) {
    CAPTURE(name);
    RunResult r = run_cli(std::string("example ") + name + " --emit");
    REQUIRE(r.code == 0);
    CHECK(r.out == emit_document(document_from_fixture(fixture(name))));
  }
}

TEST_CASE("checks pass on a colimiting example and report the verdict") {
  std::string doc = fixture_doc("idempotent-split");
  for (const char* sub :
       {"check-adjunction", "check-colimit", "check-limit", "check-squares", "oracle-colimit"}) {
    CAPTURE(sub);
    RunResult r = run_cli(std::string(sub) + " --input " + doc);
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
  }
}

TEST_CASE("checks fail with named violations on a broken example") {
  std::string doc = fixture_doc("idempotent-unsplit");
  RunResult col = run_cli("check-colimit --input " + doc);
  CHECK(col.code == 1);
  CHECK(contains(col.out, "violation:"));
  CHECK(contains(col.out, "comparison map not invertible"));
  RunResult sq = run_cli("check-squares --input " + doc);
  CHECK(sq.code == 1);
  CHECK(contains(sq.out, "unit square fails at (t,s)=(0,0)"));
  RunResult orc = run_cli("oracle-colimit --input " + doc);
  CHECK(orc.code == 1);
}

TEST_CASE("derive prints the other structure map as JSON components") {
  std::string doc = fixture_doc("burnside-c2");
  RunResult down = run_cli("derive b-from-a --input " + doc);
  REQUIRE(down.code == 0);
  CHECK(down.out == emit_components_json(fixture("burnside-c2").scase.cone));
  RunResult up = run_cli("derive a-from-b --input " + doc);
  REQUIRE(up.code == 0);
  CHECK(up.out == emit_components_json(fixture("burnside-c2").scase.cocone));
}

TEST_CASE("audit prints the enumeration counts") {
  std::string doc = fixture_doc("idempotent-split");
  RunResult r = run_cli("audit --input " + doc + " --max-size 4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "cocone candidates: 1"));
  CHECK(contains(r.out, "colimiting cocones: 1"));
  CHECK(contains(r.out, "limiting cones: 1"));
  CHECK(contains(r.out, "square pairs: 1"));
  CHECK(contains(r.out, "roundtrips: ok"));
  RunResult s = run_cli("audit --input " + doc + " --max-size 4 --serial");
  CHECK(s.code == 0);
  CHECK(s.out == r.out);
}

TEST_CASE("audit refuses oversized carriers through the size bound") {
  std::string doc = fixture_doc("idempotent-split");
  RunResult r = run_cli("audit --input " + doc + " --max-size 1");
  CHECK(r.code == 2);
  CHECK(contains(r.out, "audit size bound exceeded"));
}

TEST_CASE("a case without the needed structure map is a usage error") {
  Document doc = document_from_fixture(fixture("idempotent-split"));
  for (auto& [name, decl] : doc.cases) decl.cocone.clear();
  std::string path = temp_doc("no-cocone", emit_document(doc));
  RunResult col = run_cli("check-colimit --input " + path);
  CHECK(col.code == 2);
  CHECK(contains(col.out, "needs a case with a cocone"));
  RunResult sq = run_cli("check-squares --input " + path);
  CHECK(sq.code == 2);
  RunResult lim = run_cli("check-limit --input " + path);
  CHECK(lim.code == 0);
}

TEST_CASE("malformed input and misuse exit with code 2") {
  std::string trunc = temp_doc("trunc", "{\"format_version\": \"1\"");
  CHECK(run_cli("check-colimit --input " + trunc).code == 2);
  CHECK(run_cli("check-colimit --input does-not-exist.json").code == 2);
  std::string doc = fixture_doc("idempotent-split");
  RunResult badcase = run_cli("check-colimit --input " + doc + " --case nope");
  CHECK(badcase.code == 2);
  CHECK(contains(badcase.out, "unknown case 'nope'"));
  CHECK(run_cli("no-such-command").code == 2);
  CHECK(run_cli("example no-such-fixture").code == 2);
  CHECK(run_cli("derive sideways --input " + doc).code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "check-colimit"));
}
