#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absolim/absolute.hpp"
#include "absolim/instances.hpp"

namespace absolim {

// JSON documents describe enriched data over a single base. Sections appear
// in dependency order (categories, functors, profunctors, maps, adjunctions,
// cases) and entries may only reference names declared before them. Carried
// morphisms never restate their endpoints: those are implied by the position
// the morphism occupies, and tables or matrices are validated against them.
//
// Parsing resolves every declaration eagerly, so a Document that parsed is
// structurally sound; whether the data satisfies the axioms is decided by
// the check commands. Emission is deterministic and always fully explicit,
// except that profunctors declared through a shorthand keep it.

struct CatDecl {
  bool self_enriched = false;
  std::vector<BaseObject> objects;
  // explicit form only:
  std::vector<BaseObject> hom;
  std::vector<BaseMorphism> unit, comp;
};

struct FunctorDecl {
  std::string dom, cod;
  std::vector<int> objects;
  std::vector<BaseMorphism> action;
};

enum class ProfKind { explicit_form, identity_of, hom_of, tensor_of };

struct ProfDecl {
  ProfKind kind = ProfKind::explicit_form;
  std::string a, b;  // identity_of: a = category; hom_of: functors; tensor_of: profunctors
  // explicit form only:
  std::string source, target;
  std::vector<BaseObject> components;
  std::vector<BaseMorphism> left_action, right_action;
};

struct MapDecl {
  std::string dom, cod;  // profunctor names
  std::vector<BaseMorphism> components;
};

struct AdjDecl {
  std::string weight, coweight;
  std::vector<BaseMorphism> unit, counit;
};

struct CaseDecl {
  std::string adjunction, diagram, apex;
  std::string cocone, cone;  // empty when omitted
};

struct ResolvedCase {
  Adjunction adj;
  VFunctor diag;
  VFunctor apex;
  bool has_cocone = false, has_cone = false;
  ProfMap cocone, cone;
};

struct Document {
  BaseTag base = BaseTag::finset;
  std::vector<std::pair<std::string, CatDecl>> categories;
  std::vector<std::pair<std::string, FunctorDecl>> functors;
  std::vector<std::pair<std::string, ProfDecl>> profunctors;
  std::vector<std::pair<std::string, MapDecl>> maps;
  std::vector<std::pair<std::string, AdjDecl>> adjunctions;
  std::vector<std::pair<std::string, CaseDecl>> cases;

  // filled during resolution
  std::map<std::string, VCategory> cat_values;
  std::map<std::string, VFunctor> fun_values;
  std::map<std::string, Profunctor> prof_values;
  std::map<std::string, ProfMap> map_values;
  std::map<std::string, Adjunction> adj_values;

  const VCategory& category(const std::string& name) const;
  const VFunctor& functor(const std::string& name) const;
  const Profunctor& profunctor(const std::string& name) const;
  const ProfMap& map(const std::string& name) const;
  const Adjunction& adjunction(const std::string& name) const;
};

// Throws CatError on malformed input (bad JSON, unknown names, size or range
// mismatches, non-lattice orders, invalid rationals).
Document parse_document(const std::string& text);

std::string emit_document(const Document& doc);

// Explicit document reproducing the fixture's squares data bit for bit.
Document document_from_fixture(const Fixture& fx);

// Indented JSON object {"components": [...]} holding a map's component
// morphisms, for tool output.
std::string emit_components_json(const ProfMap& m);

// Empty name picks the document's only case; a missing name throws.
const CaseDecl& find_case(const Document& doc, const std::string& name);

ResolvedCase resolve_case(const Document& doc, const CaseDecl& c);

}  // namespace absolim
