// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 1 when any
// criterion fails. Each criterion carries a wall-clock budget; running over
// budget fails it even when the checks themselves succeed.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "absolim/absolute.hpp"
#include "absolim/instances.hpp"
#include "support/gen.hpp"
#include "support/randcase.hpp"

using namespace absolim;
using absolim::testgen::Rng;

namespace {

int failures = 0;

template <typename F>
void criterion(const std::string& label, double budget_secs, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string note;
  bool ok = true;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_secs) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += "over the " + std::to_string(budget_secs) + "s budget";
  }
  if (!ok) ++failures;
  std::ostringstream line;
  line << (ok ? "[PASS] " : "[FAIL] ") << label;
  if (!note.empty()) line << " -- " << note;
  line << " (" << std::fixed;
  line.precision(2);
  line << secs << "s)";
  std::cout << line.str() << "\n" << std::flush;
}

// --- criterion bodies -----------------------------------------------------------

bool audit_separates_idempotents(std::string& note) {
  AuditReport split =
      bijection_audit(audit_setup(fixture("idempotent-split")), 4, ExecMode::openmp);
  AuditReport unsplit =
      bijection_audit(audit_setup(fixture("idempotent-unsplit")), 4, ExecMode::openmp);
  std::ostringstream n;
  n << "split " << split.cocone_count << "/" << split.cone_count << "/" << split.pair_count
    << ", unsplit " << unsplit.cocone_count << "/" << unsplit.cone_count << "/"
    << unsplit.pair_count;
  note = n.str();
  return split.cocone_count == 1 && split.cone_count == 1 && split.pair_count == 1 &&
         split.roundtrips_ok && unsplit.cocone_count == 0 && unsplit.cone_count == 0 &&
         unsplit.pair_count == 0 && unsplit.roundtrips_ok;
}

bool checker_matches_element_oracle(std::string& note) {
  Rng rng(20260814);
  const int trials = 150;
  int colimiting = 0, rejected = 0;
  for (int i = 0; i < trials; ++i) {
    ColimitCase cc = testgen::random_colimit_instance(rng);
    const bool checker = check_colimit(cc).ok();
    const bool oracle = oracle_colimit(cc).ok();
    if (checker != oracle) {
      note = "disagreement on instance " + std::to_string(i);
      return false;
    }
    (checker ? colimiting : rejected) += 1;
  }
  std::ostringstream n;
  n << trials << " instances, " << colimiting << " colimiting, " << rejected << " rejected";
  note = n.str();
  return colimiting > 0 && rejected > 0;
}

// Counts differing rational entries between two base morphisms of equal shape.
int entry_diffs(const BaseMorphism& a, const BaseMorphism& b) {
  int d = 0;
  for (int r = 0; r < a.cod.n; ++r)
    for (int c = 0; c < a.dom.n; ++c)
      if (a.mat.at(r, c) != b.mat.at(r, c)) ++d;
  return d;
}

bool single_entry_flips_squares(std::string& note) {
  const SquaresCase& good = fixture("biproduct").scase;
  const SquaresCase& bad = fixture("biproduct-perturbed").scase;
  if (good.cocone.components.size() != bad.cocone.components.size()) {
    note = "fixtures have different shapes";
    return false;
  }
  int diffs = 0;
  for (size_t i = 0; i < good.cocone.components.size(); ++i)
    diffs += entry_diffs(good.cocone.components[i], bad.cocone.components[i]);
  for (size_t i = 0; i < good.cone.components.size(); ++i)
    diffs += entry_diffs(good.cone.components[i], bad.cone.components[i]);
  const bool same_adj = good.adj.weight == bad.adj.weight &&
                        good.adj.coweight == bad.adj.coweight &&
                        good.adj.unit_map == bad.adj.unit_map &&
                        good.adj.counit_map == bad.adj.counit_map;
  Report before = check_squares(good);
  Report after = check_squares(bad);
  if (!before.ok()) {
    note = "unperturbed squares already fail";
    return false;
  }
  if (after.ok()) {
    note = "perturbed squares still pass";
    return false;
  }
  const std::string& v = after.violations.front();
  std::ostringstream n;
  n << diffs << " entry changed, verdict: " << v;
  note = n.str();
  return same_adj && diffs == 1 && v.find("square fails") != std::string::npos;
}

bool averaging_is_entry_exact(std::string& note) {
  struct Group {
    const char* name;
    int d;
  };
  double worst = 0;
  for (Group g : {Group{"burnside-c2", 2}, Group{"burnside-s3", 3}}) {
    auto t0 = std::chrono::steady_clock::now();
    const Fixture& fx = fixture(g.name);
    if (!check_adjunction(fx.scase.adj).ok()) {
      note = std::string(g.name) + ": adjunction fails its triangle identities";
      return false;
    }
    QMat sect(g.d, 1), proj(1, g.d);
    for (int k = 0; k < g.d; ++k) {
      sect.at(k, 0) = 1;
      proj.at(0, k) = Rat(1, g.d);
    }
    DeriveResult down = derive_cone(fx.scase.adj, colimit_case(fx));
    DeriveResult up = derive_cocone(fx.scase.adj, limit_case(fx));
    if (!down.ok || down.derived.components[0].mat != flatten_hom(sect)) {
      note = std::string(g.name) + ": derived cone is not the section";
      return false;
    }
    if (!up.ok || up.derived.components[0].mat != flatten_hom(proj)) {
      note = std::string(g.name) + ": derived cocone is not the averaging projection";
      return false;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > worst) worst = secs;
  }
  auto t0 = std::chrono::steady_clock::now();
  Report r = check_adjunction(fixture("burnside-c2-unnormalized").scase.adj);
  if (r.ok()) {
    note = "unnormalized averaging still satisfies the triangles";
    return false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > worst) worst = secs;
  std::ostringstream n;
  n << "weights 1/2 and 1/3 exact; unnormalized verdict: " << r.violations.front()
    << "; slowest part " << std::fixed;
  n.precision(2);
  n << worst << "s";
  note = n.str();
  return worst <= 1.0 && r.violations.front().find("triangle") != std::string::npos;
}

bool duality_preserves_verdicts(std::string& note) {
  int checked = 0;
  for (const Fixture& fx : builtin_fixtures()) {
    ColimitCase cc = colimit_case(fx);
    LimitCase lc = limit_case(fx);
    if (check_limit(dual_of_colimit(cc)).ok() != check_colimit(cc).ok()) {
      note = fx.name + ": dualized cocone verdict differs";
      return false;
    }
    if (check_colimit(dual_of_limit(lc)).ok() != check_limit(lc).ok()) {
      note = fx.name + ": dualized cone verdict differs";
      return false;
    }
    ++checked;
  }
  note = std::to_string(checked) + " fixtures, both directions";
  return true;
}

bool base_layer_randomized(std::string& note) {
  using namespace absolim::testgen;
  Rng rng(8421);
  long cases = 0;
  for (BaseTag tag : all_tags()) {
    for (int it = 0; it < 500; ++it) {
      ++cases;
      auto t4 = random_tuple(rng, tag, 4);
      const auto &a = t4[0], &b = t4[1], &c = t4[2], &d = t4[3];
      // pentagon
      auto top =
          seq(associator(tensor_obj(a, b), c, d), associator(a, b, tensor_obj(c, d)));
      auto bottom = seq(tensor_mor(associator(a, b, c), identity(d)),
                        associator(a, tensor_obj(b, c), d),
                        tensor_mor(identity(a), associator(b, c, d)));
      if (top != bottom) {
        note = "pentagon fails over " + tag_name(tag);
        return false;
      }
      // triangle and symmetry
      auto i = unit_obj(tag);
      if (seq(associator(a, i, b), tensor_mor(identity(a), left_unitor(b))) !=
          tensor_mor(right_unitor(a), identity(b))) {
        note = "triangle fails over " + tag_name(tag);
        return false;
      }
      if (seq(braiding(a, b), braiding(b, a)) != identity(tensor_obj(a, b))) {
        note = "symmetry fails over " + tag_name(tag);
        return false;
      }
      // hexagon
      if (seq(associator(a, b, c), braiding(a, tensor_obj(b, c)), associator(b, c, a)) !=
          seq(tensor_mor(braiding(a, b), identity(c)), associator(b, a, c),
              tensor_mor(identity(b), braiding(a, c)))) {
        note = "hexagon fails over " + tag_name(tag);
        return false;
      }
      // curry round trip
      {
        auto x = random_object(rng, tag, 3);
        auto ab = tensor_obj(a, b);
        if (!(tag == BaseTag::finset && x.n == 0 && ab.n > 0)) {
          auto f = random_morphism(rng, ab, x);
          if (uncurry_left(a, b, x, curry_left(a, b, f)) != f) {
            note = "left currying not a bijection over " + tag_name(tag);
            return false;
          }
          auto f2 = random_morphism(rng, tensor_obj(b, a), x);
          if (uncurry_right(b, a, x, curry_right(b, a, f2)) != f2) {
            note = "right currying not a bijection over " + tag_name(tag);
            return false;
          }
        }
      }
      // coequalizer factorization
      {
        auto u = random_object(rng, tag, 3);
        auto w = random_object(rng, tag, 3);
        if (tag == BaseTag::finset && w.n == 0 && u.n > 0) continue;
        auto f = random_morphism(rng, u, w);
        auto g = random_morphism(rng, u, w);
        auto coeq = coequalizer(f, g);
        auto x = random_object(rng, tag, 3);
        if (tag == BaseTag::finset && x.n == 0 && coeq.obj.n > 0) continue;
        auto r = random_morphism(rng, coeq.obj, x);
        if (induce_from_coequalizer(coeq.projection, seq(coeq.projection, r)) != r) {
          note = "coequalizer factorization not unique over " + tag_name(tag);
          return false;
        }
      }
    }
  }
  // Tensor certification: maps out of a tensor match direct bimorphism counts.
  long triples = 0;
  for (const Lat& a : catalog_le4())
    for (const Lat& b : catalog_le4())
      for (const Lat& c : catalog_le4()) {
        ++triples;
        long direct = count_bimorphisms(a, b, c, true);
        long through =
            hom_size(tensor_obj(suplat_obj(a), suplat_obj(b)), suplat_obj(c));
        if (direct != through) {
          std::ostringstream n;
          n << "bimorphism count " << direct << " but " << through
            << " maps out of the tensor (sizes " << a.n << "," << b.n << "," << c.n << ")";
          note = n.str();
          return false;
        }
      }
  std::ostringstream n;
  n << cases << " randomized cases, " << triples << " tensor certifications";
  note = n.str();
  return true;
}

}  // namespace

int main() {
  criterion(
      "exhaustive audit separates the split idempotent (1/1/1) from the unsplit one (0/0/0)",
      5.0, audit_separates_idempotents);
  criterion("random instances: structural checker agrees with the element oracle", 60.0,
            checker_matches_element_oracle);
  criterion("a single perturbed entry flips the square verdict and names the square", 1.0,
            single_entry_flips_squares);
  criterion("derived maps realize group averaging exactly; unnormalized unit fails a triangle",
            3.0, averaging_is_entry_exact);
  criterion("limit and colimit verdicts agree under formal duality on every fixture", 10.0,
            duality_preserves_verdicts);
  criterion("randomized coherence, currying, coequalizers per base; tensor bimorphism counts",
            120.0, base_layer_randomized);
  std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
