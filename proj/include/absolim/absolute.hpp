#pragma once

#include "absolim/modcalc.hpp"

namespace absolim {

// A weighted diagram with a chosen cocone. weight: A -|-> B, diag: B -> C,
// apex: A -> C, cocone: weight -> hom_profunctor(apex, diag), i.e. components
// weight(b, a) -> C(diag b, apex a).
struct ColimitCase {
  Profunctor weight;
  VFunctor diag;
  VFunctor apex;
  ProfMap cocone;
};

// Mirror data: coweight: B -|-> A, cone: coweight -> hom_profunctor(diag, apex),
// components coweight(a, b) -> C(apex a, diag b).
struct LimitCase {
  Profunctor coweight;
  VFunctor diag;
  VFunctor apex;
  ProfMap cone;
};

// Both structures plus the adjunction that ties them together.
struct SquaresCase {
  Adjunction adj;
  VFunctor diag;
  VFunctor apex;
  ProfMap cocone;
  ProfMap cone;
};

// The cocone is colimiting iff for every ambient object c the pairing
//   weight (x)_A C(apex, c) -> C(diag, c)
// exhibits C(apex, c) as the left lifting hom. Checked per object.
Report check_colimit(const ColimitCase& cc);

// Mirror: for every c the pairing C(c, apex) (x)_A coweight -> C(c, diag)
// exhibits C(c, apex) as the right lifting hom.
Report check_limit(const LimitCase& lc);

// The two compatibility squares between a cocone and a cone:
//   unit square:    unit then (cone (x) cocone then compose)  ==  apex action
//   counit square:  (cocone (x) cone then compose)  ==  counit then diag action
Report check_squares(const SquaresCase& sc);

struct DeriveResult {
  bool ok = false;
  ProfMap derived;
  Report detail;
};

// Produce the unique cone compatible with a colimiting cocone, and verify the
// squares afterwards. Fails (ok = false) when the cocone is not colimiting.
DeriveResult derive_cone(const Adjunction& adj, const ColimitCase& cc);

// Dual: produce the cocone compatible with a limiting cone.
DeriveResult derive_cocone(const Adjunction& adj, const LimitCase& lc);

// From valid squares, constructively verify that the cocone is colimiting:
// the evaluation map of each lifting hom is factored through the pairing and
// the two composites are checked to be identities, plus a uniqueness probe.
// This route never inverts a morphism, so it is independent of check_colimit.
Report colimit_from_squares(const SquaresCase& sc);

// Factorization through an exhibited colimit: given f: weight (x) k -> C(probe, diag)
// (a competing cocone with values in the image of probe), produce
// fbar: k -> C(probe, apex) using only the cone and the adjunction unit.
ProfMap factor_through_colimit(const Adjunction& adj, const VFunctor& diag,
                               const VFunctor& apex, const ProfMap& cone,
                               const VFunctor& probe, const Profunctor& k, const ProfMap& f);

// --- formal duality ----------------------------------------------------------

VCategory op_category(const VCategory& c);
VFunctor op_functor(const VFunctor& f);
Profunctor op_profunctor(const Profunctor& m);  // transpose with braided actions
ProfMap op_profmap(const ProfMap& a);

// (n (x) m)op -> mop (x) nop, blockwise braiding. op_pres must present
// mop (x) nop; the returned map goes op_pres.result -> op_profunctor(pres.result).
ProfMap op_tensor_swap(const TensorPresentation& pres, const TensorPresentation& op_pres);

Adjunction dual_adjunction(const Adjunction& adj);
LimitCase dual_of_colimit(const ColimitCase& cc);
ColimitCase dual_of_limit(const LimitCase& lc);

// --- enumeration sweep -------------------------------------------------------

struct AuditSetup {
  Adjunction adj;
  VFunctor diag;
  VFunctor apex;
};

struct AuditReport {
  long cocone_candidates = 0;   // raw candidate tables weight -> hom module
  long cone_candidates = 0;
  long cocone_equivariant = 0;  // candidates that are module maps
  long cone_equivariant = 0;
  long cocone_count = 0;        // equivariant candidates that are colimiting
  long cone_count = 0;          // equivariant candidates that are limiting
  long pair_count = 0;          // equivariant pairs satisfying both squares
  bool roundtrips_ok = true;
  std::vector<std::string> notes;
};

// Enumerates every candidate cocone and cone over the table bases
// (finset / finset_ptd), counts the lawful ones, and checks that derivation
// in both directions is a mutually inverse bijection between them.
// Throws CatError when a hom carrier exceeds max_hom_size.
AuditReport bijection_audit(const AuditSetup& setup, int max_hom_size, ExecMode mode);

// Element-level colimit decision for the finset base: per ambient object the
// set of action-compatible families is enumerated directly and compared with
// the maps out of the apex. Shares no code with check_colimit.
Report oracle_colimit(const ColimitCase& cc);

}  // namespace absolim
