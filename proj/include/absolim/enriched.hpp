#pragma once

#include <string>
#include <vector>

#include "absolim/base.hpp"

namespace absolim {

// Axiom checkers collect human-readable violations in a deterministic order
// (ascending loop indices). An empty list means the structure is lawful.
struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Category enriched in one of the bases. hom(b, a) is the object of maps
// b -> a, and composition goes left to right:
//   comp(c, b, a): hom(c, b) (x) hom(b, a) -> hom(c, a).
struct VCategory {
  BaseTag tag = BaseTag::finset;
  std::vector<BaseObject> objects;
  std::vector<BaseObject> hom;        // [b * n + a]
  std::vector<BaseMorphism> unit;     // [a]: I -> hom(a, a)
  std::vector<BaseMorphism> comp;     // [(c * n + b) * n + a]

  int size() const { return int(objects.size()); }
  const BaseObject& hom_ob(int b, int a) const { return hom[size_t(b) * size() + a]; }
  const BaseMorphism& mu(int c, int b, int a) const {
    return comp[(size_t(c) * size() + b) * size() + a];
  }
  bool operator==(const VCategory& o) const {
    return tag == o.tag && objects == o.objects && hom == o.hom && unit == o.unit &&
           comp == o.comp;
  }
  bool operator!=(const VCategory& o) const { return !(*this == o); }
};

struct VFunctor {
  VCategory dom, cod;
  std::vector<int> object_map;
  std::vector<BaseMorphism> action;  // [b * dom.size() + a]: hom(b,a) -> hom(Fb,Fa)

  int ob(int a) const { return object_map[size_t(a)]; }
  const BaseMorphism& act(int b, int a) const { return action[size_t(b) * dom.size() + a]; }
};

// Module from source to target: components M(t, s) carry a left action of the
// target's homs and a right action of the source's homs.
struct Profunctor {
  VCategory source, target;
  std::vector<BaseObject> components;       // [t * ns + s]
  std::vector<BaseMorphism> left_action;    // [(t2 * nt + t) * ns + s]:
                                            //   target.hom(t2,t) (x) M(t,s) -> M(t2,s)
  std::vector<BaseMorphism> right_action;   // [(t * ns + s) * ns + s2]:
                                            //   M(t,s) (x) source.hom(s,s2) -> M(t,s2)

  int ns() const { return int(source.objects.size()); }
  int nt() const { return int(target.objects.size()); }
  const BaseObject& at(int t, int s) const { return components[size_t(t) * ns() + s]; }
  const BaseMorphism& lact(int t2, int t, int s) const {
    return left_action[(size_t(t2) * nt() + t) * ns() + s];
  }
  const BaseMorphism& ract(int t, int s, int s2) const {
    return right_action[(size_t(t) * ns() + s) * ns() + s2];
  }
  bool operator==(const Profunctor& o) const {
    return source == o.source && target == o.target && components == o.components &&
           left_action == o.left_action && right_action == o.right_action;
  }
  bool operator!=(const Profunctor& o) const { return !(*this == o); }
};

struct ProfMap {
  Profunctor dom, cod;
  std::vector<BaseMorphism> components;  // [t * ns + s]: dom(t,s) -> cod(t,s)

  const BaseMorphism& at(int t, int s) const {
    return components[size_t(t) * dom.ns() + s];
  }
  bool operator==(const ProfMap& o) const {
    return dom == o.dom && cod == o.cod && components == o.components;
  }
  bool operator!=(const ProfMap& o) const { return !(*this == o); }
};

Report check_category(const VCategory& c);
Report check_functor(const VFunctor& f);
Report check_profunctor(const Profunctor& m);
Report check_profmap(const ProfMap& a);

// One object, hom carrier I, composition the unitor.
VCategory unit_category(BaseTag tag);

VFunctor identity_functor(const VCategory& c);
// Functor from the one-object category picking out obj.
VFunctor const_functor(const VCategory& c, int obj);

// The hom bimodule of the category itself: components (t,s) = hom(t,s),
// both actions given by composition.
Profunctor identity_profunctor(const VCategory& a);

// For F: A -> C and G: B -> C, the module C(G, F): A -|-> B with components
// (t, s) = C(G t, F s) and actions by precomposition along G and
// postcomposition along F.
Profunctor hom_profunctor(const VFunctor& f, const VFunctor& g);

ProfMap identity_profmap(const Profunctor& m);

}  // namespace absolim
