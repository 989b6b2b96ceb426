// Command line front end: loads a JSON document, picks a case, and runs one
// of the exact checks. Exit codes: 0 all checks passed, 1 a check reported
// violations, 2 the input was malformed or the command misused.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "absolim/absolute.hpp"
#include "absolim/io.hpp"

namespace {

using namespace absolim;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ResolvedCase load_case(const std::string& input, const std::string& case_name) {
  Document doc = parse_document(slurp(input));
  return resolve_case(doc, find_case(doc, case_name));
}

ColimitCase as_colimit(const ResolvedCase& rc) {
  if (!rc.has_cocone) throw CatError("this command needs a case with a cocone");
  return ColimitCase{rc.adj.weight, rc.diag, rc.apex, rc.cocone};
}

LimitCase as_limit(const ResolvedCase& rc) {
  if (!rc.has_cone) throw CatError("this command needs a case with a cone");
  return LimitCase{rc.adj.coweight, rc.diag, rc.apex, rc.cone};
}

int print_report(const Report& r) {
  if (r.ok()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const std::string& v : r.violations) std::cout << "violation: " << v << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for absolute weighted (co)limits over finite enriched bases"};
  app.require_subcommand(1);

  std::string input, case_name;
  auto add_case_opts = [&](CLI::App* sub) {
    sub->add_option("--input", input, "JSON document to load")->required();
    sub->add_option("--case", case_name, "case name (defaults to the document's only case)");
    return sub;
  };

  int exit_code = 0;

  CLI::App* c_adj = add_case_opts(app.add_subcommand(
      "check-adjunction", "verify the triangle identities of the case's adjunction"));
  c_adj->callback(
      [&] { exit_code = print_report(check_adjunction(load_case(input, case_name).adj)); });

  CLI::App* c_col = add_case_opts(
      app.add_subcommand("check-colimit", "decide whether the cocone is colimiting"));
  c_col->callback(
      [&] { exit_code = print_report(check_colimit(as_colimit(load_case(input, case_name)))); });

  CLI::App* c_lim = add_case_opts(
      app.add_subcommand("check-limit", "decide whether the cone is limiting"));
  c_lim->callback(
      [&] { exit_code = print_report(check_limit(as_limit(load_case(input, case_name)))); });

  CLI::App* c_sq = add_case_opts(app.add_subcommand(
      "check-squares", "verify the two compatibility squares between cocone and cone"));
  c_sq->callback([&] {
    ResolvedCase rc = load_case(input, case_name);
    if (!rc.has_cocone || !rc.has_cone)
      throw CatError("this command needs a case with both a cocone and a cone");
    exit_code = print_report(
        check_squares(SquaresCase{rc.adj, rc.diag, rc.apex, rc.cocone, rc.cone}));
  });

  std::string direction;
  CLI::App* c_der = add_case_opts(app.add_subcommand(
      "derive", "derive one structure map from the other through the adjunction"));
  c_der->add_option("direction", direction, "b-from-a: cone from cocone; a-from-b: cocone from cone")
      ->required()
      ->check(CLI::IsMember({"b-from-a", "a-from-b"}));
  c_der->callback([&] {
    ResolvedCase rc = load_case(input, case_name);
    DeriveResult dr = direction == "b-from-a" ? derive_cone(rc.adj, as_colimit(rc))
                                              : derive_cocone(rc.adj, as_limit(rc));
    if (!dr.ok) {
      exit_code = print_report(dr.detail);
      return;
    }
    std::cout << emit_components_json(dr.derived);
  });

  int max_size = 4;
  bool serial = false;
  CLI::App* c_aud = add_case_opts(app.add_subcommand(
      "audit", "enumerate all cocones and cones and count the lawful ones"));
  c_aud->add_option("--max-size", max_size, "largest hom carrier the sweep will accept");
  c_aud->add_flag("--serial", serial, "run the sweep on one thread");
  c_aud->callback([&] {
    ResolvedCase rc = load_case(input, case_name);
    AuditReport r = bijection_audit(AuditSetup{rc.adj, rc.diag, rc.apex}, max_size,
                                    serial ? ExecMode::serial : ExecMode::openmp);
    std::cout << "cocone candidates: " << r.cocone_candidates << "\n"
              << "cone candidates: " << r.cone_candidates << "\n"
              << "equivariant cocones: " << r.cocone_equivariant << "\n"
              << "equivariant cones: " << r.cone_equivariant << "\n"
              << "colimiting cocones: " << r.cocone_count << "\n"
              << "limiting cones: " << r.cone_count << "\n"
              << "square pairs: " << r.pair_count << "\n"
              << "roundtrips: " << (r.roundtrips_ok ? "ok" : "FAIL") << "\n";
    for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
    exit_code = r.roundtrips_ok ? 0 : 1;
  });

  CLI::App* c_orc = add_case_opts(app.add_subcommand(
      "oracle-colimit", "decide the colimit by direct element enumeration (table bases)"));
  c_orc->callback([&] {
    exit_code = print_report(oracle_colimit(as_colimit(load_case(input, case_name))));
  });

  std::string example_name;
  bool emit = false, list = false;
  CLI::App* c_ex = app.add_subcommand("example", "show or emit a built-in worked example");
  c_ex->add_option("name", example_name, "example name");
  c_ex->add_flag("--emit", emit, "print the example as a JSON document");
  c_ex->add_flag("--list", list, "list all example names");
  c_ex->callback([&] {
    if (list) {
      for (const Fixture& fx : builtin_fixtures())
        std::cout << fx.name << ": " << fx.summary << "\n";
      return;
    }
    if (example_name.empty()) throw CatError("example needs a name or --list");
    const Fixture& fx = fixture(example_name);
    if (emit) {
      std::cout << emit_document(document_from_fixture(fx));
      return;
    }
    std::cout << fx.name << ": " << fx.summary << "\n"
              << "expected verdict: " << (fx.expected_pass ? "pass" : "fail") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
