#pragma once

#include <string>
#include <vector>

#include "absolim/absolute.hpp"

namespace absolim {

// Ambient category whose objects are base objects and whose hom carriers are
// the base's own internal homs, with composition and units obtained by
// currying. Works uniformly over all four bases.
VCategory self_enriched_category(BaseTag tag, const std::vector<BaseObject>& objects);

VCategory empty_category(BaseTag tag);

// k objects, endo homs the unit object, cross homs the smallest object of the
// base (empty set, one-point set, zero space, one-element lattice).
VCategory discrete_category(BaseTag tag, int k);

// One object with the given hom carrier; mult: carrier (x) carrier -> carrier
// is the composition read left to right, unit_elt: I -> carrier its identity.
VCategory monoid_category(BaseTag tag, const BaseObject& carrier,
                          const BaseMorphism& unit_elt, const BaseMorphism& mult);

// One object over matq, hom the group algebra on basis 0..n-1 where
// mult[g][h] = g.h composes h first. Index 0 must be the identity.
VCategory group_algebra_category(const std::vector<std::vector<int>>& mult);

// Constant-bottom / constant-basepoint / zero-matrix morphism. For finset this
// is the constant 0 map, so cod must be nonempty unless dom is empty.
BaseMorphism zero_morphism(const BaseObject& dom, const BaseObject& cod);

// Pointwise join (suplat) or sum (matq) of parallel morphisms.
BaseMorphism superpose(const BaseMorphism& a, const BaseMorphism& b);

// Weight I at every object of a discrete target, acting by unitors; and the
// matching coweight. Both take the one-object source category.
Profunctor discrete_weight(const VCategory& point, const VCategory& disc);
Profunctor discrete_coweight(const VCategory& disc, const VCategory& point);

// Diagram on a discrete shape: picks obs[i] with identity endo actions.
VFunctor discrete_diagram(const VCategory& disc, const VCategory& amb,
                          const std::vector<int>& obs);

// A self-contained worked example: an adjunction of modules, a diagram and an
// apex over it, and the two structure maps, plus the verdict the checkers are
// expected to reach on the package as a whole.
struct Fixture {
  std::string name;
  std::string summary;
  SquaresCase scase;
  bool expected_pass = true;
};

const std::vector<Fixture>& builtin_fixtures();
const Fixture& fixture(const std::string& name);  // throws CatError on unknown names

ColimitCase colimit_case(const Fixture& fx);
LimitCase limit_case(const Fixture& fx);
AuditSetup audit_setup(const Fixture& fx);

}  // namespace absolim
