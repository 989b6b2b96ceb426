#include "doctest.h"

#include "absolim/instances.hpp"
#include "support/gen.hpp"
#include "support/randcase.hpp"

using namespace absolim;

namespace {

bool any_contains(const std::vector<std::string>& vs, const std::string& needle) {
  for (const auto& v : vs)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("fixture verdicts for colimit, limit, and square checks") {
  for (const Fixture& fx : builtin_fixtures()) {
    INFO(fx.name);
    Report col = check_colimit(colimit_case(fx));
    Report lim = check_limit(limit_case(fx));
    Report sq = check_squares(fx.scase);
    if (fx.expected_pass) {
      INFO((col.ok() ? (lim.ok() ? sq : lim) : col).violations.front());
      CHECK(col.ok());
      CHECK(lim.ok());
      CHECK(sq.ok());
    } else if (fx.name == "idempotent-unsplit" || fx.name == "pointed-nonzero") {
      // Nothing about these candidates is lawful: no colimit, no limit,
      // and the pair fails its unit square.
      CHECK_FALSE(col.ok());
      CHECK_FALSE(lim.ok());
      CHECK_FALSE(sq.ok());
      CHECK(any_contains(sq.violations, "unit square fails at (t,s)=(0,0)"));
    } else if (fx.name == "biproduct-perturbed") {
      // The corrupted injection still presents a (different) direct sum, so
      // each side alone passes; only the pair is mismatched.
      CHECK(col.ok());
      CHECK(lim.ok());
      CHECK_FALSE(sq.ok());
      CHECK(any_contains(sq.violations, "counit square fails at (t,s)=(0,1)"));
    } else if (fx.name == "burnside-c2-unnormalized") {
      CHECK(col.ok());
      CHECK(lim.ok());
      CHECK_FALSE(sq.ok());
      CHECK(any_contains(sq.violations, "counit square fails at (t,s)=(0,0)"));
    } else {
      FAIL("fixture with unexpected failure mode: " << fx.name);
    }
  }
}

TEST_CASE("squares plus adjunction imply the colimit, constructively") {
  for (const Fixture& fx : builtin_fixtures()) {
    INFO(fx.name);
    Report rep = colimit_from_squares(fx.scase);
    if (fx.expected_pass)
      CHECK(rep.ok());
    else
      CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("deriving the cone from the cocone reproduces the stored cone") {
  for (const Fixture& fx : builtin_fixtures()) {
    if (!fx.expected_pass) continue;
    INFO(fx.name);
    DeriveResult dr = derive_cone(fx.scase.adj, colimit_case(fx));
    REQUIRE(dr.ok);
    CHECK(dr.derived == fx.scase.cone);
    DeriveResult back = derive_cocone(fx.scase.adj, limit_case(fx));
    REQUIRE(back.ok);
    CHECK(back.derived == fx.scase.cocone);
  }
}

TEST_CASE("a perturbed but lawful cocone derives its own matching cone") {
  const Fixture& fx = fixture("biproduct-perturbed");
  DeriveResult dr = derive_cone(fx.scase.adj, colimit_case(fx));
  REQUIRE(dr.ok);
  CHECK(dr.derived != fx.scase.cone);
  SquaresCase repaired = fx.scase;
  repaired.cone = dr.derived;
  CHECK(check_squares(repaired).ok());
  LimitCase lc{fx.scase.adj.coweight, fx.scase.diag, fx.scase.apex, dr.derived};
  DeriveResult back = derive_cocone(fx.scase.adj, lc);
  REQUIRE(back.ok);
  CHECK(back.derived == fx.scase.cocone);
}

TEST_CASE("group averaging appears entry-exactly in the derived maps") {
  // For the two-element swap action the section is the all-ones column and
  // the projection averages with weight one half; for the three-letter
  // permutation action the weights are thirds.
  struct Expect {
    const char* name;
    int d;
  };
  for (Expect e : {Expect{"burnside-c2", 2}, Expect{"burnside-s3", 3}}) {
    const Fixture& fx = fixture(e.name);
    DeriveResult dr = derive_cone(fx.scase.adj, colimit_case(fx));
    REQUIRE(dr.ok);
    QMat sect(e.d, 1), proj(1, e.d);
    for (int k = 0; k < e.d; ++k) {
      sect.at(k, 0) = 1;
      proj.at(0, k) = Rat(1, e.d);
    }
    CHECK(dr.derived.components[0].mat == flatten_hom(sect));
    DeriveResult back = derive_cocone(fx.scase.adj, limit_case(fx));
    REQUIRE(back.ok);
    CHECK(back.derived.components[0].mat == flatten_hom(proj));
  }
}

TEST_CASE("opposite constructions are involutive and lawful") {
  for (const char* name :
       {"idempotent-split", "pointed-zero", "biproduct", "suplat-pair", "burnside-c2"}) {
    const Fixture& fx = fixture(name);
    INFO(name);
    const VCategory& amb = fx.scase.diag.cod;
    VCategory op = op_category(amb);
    CHECK(check_category(op).ok());
    CHECK(op_category(op) == amb);

    VFunctor fop = op_functor(fx.scase.diag);
    CHECK(check_functor(fop).ok());

    Profunctor w = fx.scase.adj.weight;
    Profunctor wop = op_profunctor(w);
    CHECK(check_profunctor(wop).ok());
    CHECK(op_profunctor(wop) == w);

    // Hom modules dualize to hom modules with the roles swapped.
    Profunctor hp = hom_profunctor(fx.scase.apex, fx.scase.diag);
    CHECK(op_profunctor(hp) ==
          hom_profunctor(op_functor(fx.scase.diag), op_functor(fx.scase.apex)));
  }
}

TEST_CASE("colimit and limit checks agree across formal duality") {
  for (const Fixture& fx : builtin_fixtures()) {
    INFO(fx.name);
    ColimitCase cc = colimit_case(fx);
    LimitCase lc = limit_case(fx);
    CHECK(check_limit(dual_of_colimit(cc)).ok() == check_colimit(cc).ok());
    CHECK(check_colimit(dual_of_limit(lc)).ok() == check_limit(lc).ok());
  }
}

TEST_CASE("dual adjunctions keep or lose the triangle identities together") {
  for (const char* name : {"idempotent-split", "biproduct", "suplat-pair", "burnside-c2",
                           "burnside-c2-unnormalized"}) {
    const Fixture& fx = fixture(name);
    INFO(name);
    Adjunction dual = dual_adjunction(fx.scase.adj);
    CHECK(check_adjunction(dual).ok() == check_adjunction(fx.scase.adj).ok());
  }
}

TEST_CASE("exhaustive audit of the split idempotent finds exactly one of everything") {
  AuditReport ar = bijection_audit(audit_setup(fixture("idempotent-split")), 4,
                                   ExecMode::serial);
  CHECK(ar.cocone_candidates == 1);
  CHECK(ar.cone_candidates == 2);
  CHECK(ar.cocone_equivariant == 1);
  CHECK(ar.cone_equivariant == 1);
  CHECK(ar.cocone_count == 1);
  CHECK(ar.cone_count == 1);
  CHECK(ar.pair_count == 1);
  CHECK(ar.roundtrips_ok);
}

TEST_CASE("exhaustive audit of the unsplit idempotent finds nothing lawful") {
  AuditReport ar = bijection_audit(audit_setup(fixture("idempotent-unsplit")), 4,
                                   ExecMode::serial);
  CHECK(ar.cocone_candidates == 4);
  CHECK(ar.cone_candidates == 4);
  CHECK(ar.cocone_equivariant == 2);
  CHECK(ar.cone_equivariant == 1);
  CHECK(ar.cocone_count == 0);
  CHECK(ar.cone_count == 0);
  CHECK(ar.pair_count == 0);
  CHECK(ar.roundtrips_ok);
}

TEST_CASE("audits of the pointed fixtures") {
  AuditReport good = bijection_audit(audit_setup(fixture("pointed-zero")), 4,
                                     ExecMode::serial);
  CHECK(good.cocone_count == 1);
  CHECK(good.cone_count == 1);
  CHECK(good.pair_count == 1);
  CHECK(good.roundtrips_ok);
  AuditReport bad = bijection_audit(audit_setup(fixture("pointed-nonzero")), 4,
                                    ExecMode::serial);
  CHECK(bad.cocone_count == 0);
  CHECK(bad.cone_count == 0);
  CHECK(bad.pair_count == 0);
}

TEST_CASE("parallel and serial audits agree") {
  for (const char* name : {"idempotent-split", "idempotent-unsplit"}) {
    AuditSetup setup = audit_setup(fixture(name));
    AuditReport s = bijection_audit(setup, 4, ExecMode::serial);
    AuditReport p = bijection_audit(setup, 4, ExecMode::openmp);
    INFO(name);
    CHECK(s.cocone_count == p.cocone_count);
    CHECK(s.cone_count == p.cone_count);
    CHECK(s.pair_count == p.pair_count);
    CHECK(s.cocone_equivariant == p.cocone_equivariant);
    CHECK(s.cone_equivariant == p.cone_equivariant);
    CHECK(s.roundtrips_ok == p.roundtrips_ok);
  }
}

TEST_CASE("audit refuses oversized hom carriers") {
  CHECK_THROWS_AS(bijection_audit(audit_setup(fixture("idempotent-unsplit")), 1,
                                  ExecMode::serial),
                  CatError);
}

TEST_CASE("element oracle agrees with the checker on the finset fixtures") {
  for (const char* name : {"idempotent-split", "idempotent-unsplit"}) {
    ColimitCase cc = colimit_case(fixture(name));
    INFO(name);
    CHECK(oracle_colimit(cc).ok() == check_colimit(cc).ok());
  }
}

TEST_CASE("element oracle agrees with the checker on random instances") {
  testgen::Rng rng(97);
  int passes = 0, fails = 0;
  for (int trial = 0; trial < 40; ++trial) {
    ColimitCase cc = testgen::random_colimit_instance(rng);
    bool via_checker = check_colimit(cc).ok();
    bool via_oracle = oracle_colimit(cc).ok();
    INFO("trial " << trial);
    CHECK(via_checker == via_oracle);
    (via_checker ? passes : fails) += 1;
  }
  // The generator must exercise both verdicts for the agreement to mean much.
  CHECK(passes > 0);
  CHECK(fails > 0);
}
