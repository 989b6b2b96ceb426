#include <string>

#include "absolim/io.hpp"
#include "doctest.h"

using namespace absolim;

namespace {

bool same_functor(const VFunctor& a, const VFunctor& b) {
  return a.dom == b.dom && a.cod == b.cod && a.object_map == b.object_map &&
         a.action == b.action;
}

std::string thrown_message(const std::string& text) {
  try {
    parse_document(text);
  } catch (const CatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture documents survive an emit, parse, emit round trip") {
  for (const Fixture& fx : builtin_fixtures()) {
    CAPTURE(fx.name);
    Document doc = document_from_fixture(fx);
    std::string first = emit_document(doc);
    Document back = parse_document(first);
    CHECK(emit_document(back) == first);
  }
}

TEST_CASE("parsing rebuilds every piece of the squares case bit for bit") {
  for (const Fixture& fx : builtin_fixtures()) {
    CAPTURE(fx.name);
    Document doc = parse_document(emit_document(document_from_fixture(fx)));
    ResolvedCase rc = resolve_case(doc, find_case(doc, "main"));
    const SquaresCase& sc = fx.scase;
    CHECK(rc.adj.weight == sc.adj.weight);
    CHECK(rc.adj.coweight == sc.adj.coweight);
    CHECK(rc.adj.unit_map == sc.adj.unit_map);
    CHECK(rc.adj.counit_map == sc.adj.counit_map);
    CHECK(same_functor(rc.diag, sc.diag));
    CHECK(same_functor(rc.apex, sc.apex));
    REQUIRE(rc.has_cocone);
    REQUIRE(rc.has_cone);
    CHECK(rc.cocone == sc.cocone);
    CHECK(rc.cone == sc.cone);
  }
}

TEST_CASE("profunctor shorthands resolve to the library constructions") {
  // Identity functor on the self-enriched category of a two and a one
  // element set; hom sizes are 4, 1, 2, 1 in (b, a) order.
  const std::string text = R"({
    "format_version": "1",
    "base": "finset",
    "categories": {"amb": {"self_enriched": true, "objects": [{"size": 2}, {"size": 1}]}},
    "functors": {"f": {"dom": "amb", "cod": "amb", "objects": [0, 1],
      "action": [{"table": [0, 1, 2, 3]}, {"table": [0]}, {"table": [0, 1]}, {"table": [0]}]}},
    "profunctors": {
      "id": {"identity_of": "amb"},
      "hh": {"hom": ["f", "f"]},
      "tt": {"tensor": ["id", "id"]}
    }
  })";
  Document doc = parse_document(text);
  const VCategory& amb = doc.category("amb");
  CHECK(amb == self_enriched_category(BaseTag::finset,
                                      {finset_obj(2), finset_obj(1)}));
  CHECK(doc.profunctor("id") == identity_profunctor(amb));
  CHECK(doc.profunctor("hh") == hom_profunctor(doc.functor("f"), doc.functor("f")));
  CHECK(doc.profunctor("tt") ==
        tensor_over(doc.profunctor("id"), doc.profunctor("id")).result);

  // Shorthands survive the round trip instead of being expanded.
  std::string emitted = emit_document(doc);
  CHECK(emitted.find("identity_of") != std::string::npos);
  CHECK(emitted.find("\"hom\"") != std::string::npos);
  CHECK(emitted.find("\"tensor\"") != std::string::npos);
  CHECK(emit_document(parse_document(emitted)) == emitted);
}

TEST_CASE("malformed documents are rejected with a located reason") {
  struct Bad {
    const char* label;
    const char* text;
    const char* needle;
  };
  const Bad bads[] = {
      {"wrong version", R"({"format_version": "2", "base": "finset"})",
       "format_version"},
      {"unknown base", R"({"format_version": "1", "base": "weird"})", "unknown base"},
      {"stray top-level field", R"({"format_version": "1", "base": "finset", "bogus": {}})",
       "unknown field 'bogus'"},
      {"unknown category reference",
       R"({"format_version": "1", "base": "finset",
           "profunctors": {"p": {"identity_of": "missing"}}})",
       "profunctor 'p': unknown category 'missing'"},
      {"unit table of the wrong length",
       R"({"format_version": "1", "base": "finset",
           "categories": {"c": {"objects": [{"size": 1}], "hom": [{"size": 1}],
             "unit": [{"table": [0, 0]}], "comp": [{"table": [0]}]}}})",
       "unit[0]"},
      {"table entry out of range",
       R"({"format_version": "1", "base": "finset",
           "categories": {"c": {"objects": [{"size": 1}], "hom": [{"size": 1}],
             "unit": [{"table": [5]}], "comp": [{"table": [0]}]}}})",
       "unit[0]"},
      {"order with no bottom",
       R"({"format_version": "1", "base": "suplat",
           "categories": {"c": {"self_enriched": true,
             "objects": [{"size": 2, "leq": [[1, 0], [0, 1]]}]}}})",
       "objects[0]"},
      {"non-canonical rational",
       R"({"format_version": "1", "base": "matq",
           "categories": {"c": {"objects": [{"dim": 1}], "hom": [{"dim": 1}],
             "unit": [{"matrix": [["2/4"]]}], "comp": [{"matrix": [["1"]]}]}}})",
       "2/4"},
      {"truncated json", R"({"format_version": "1")", "json parse error"},
  };
  for (const Bad& b : bads) {
    CAPTURE(b.label);
    std::string msg = thrown_message(b.text);
    CAPTURE(msg);
    CHECK(msg.find(b.needle) != std::string::npos);
  }
}

TEST_CASE("case lookup picks the sole case and rejects ambiguity") {
  Document doc = document_from_fixture(fixture("idempotent-split"));
  CHECK(&find_case(doc, "") == &find_case(doc, "main"));
  CHECK_THROWS_AS(find_case(doc, "nope"), CatError);
  doc.cases.emplace_back("other", doc.cases.front().second);
  CHECK_THROWS_AS(find_case(doc, ""), CatError);
}

TEST_CASE("case resolution rejects mismatched pieces") {
  Document doc = document_from_fixture(fixture("idempotent-split"));
  CaseDecl swapped = doc.cases.front().second;
  swapped.cocone = "cone";
  CHECK_THROWS_WITH_AS(resolve_case(doc, swapped),
                       doctest::Contains("cocone domain is not the weight"), CatError);
  CaseDecl away = doc.cases.front().second;
  away.cone.clear();
  ResolvedCase rc = resolve_case(doc, away);
  CHECK(rc.has_cocone);
  CHECK_FALSE(rc.has_cone);
}
