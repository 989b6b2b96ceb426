#pragma once

#include <string>
#include <vector>

#include "absolim/instances.hpp"
#include "support/gen.hpp"

namespace absolim::testgen {

// Random small colimit problem over finset: an ambient function category on
// one or two small sets, a one-object shape (trivial monoid, idempotent
// monoid, or the two-element group), a module weight over it, and a cocone
// candidate that is equivariant about half the time and arbitrary otherwise.
inline ColimitCase random_colimit_instance(Rng& rng) {
  const BaseTag tag = BaseTag::finset;
  const int nobj = pick(rng, 1, 2);
  std::vector<BaseObject> obs;
  for (int i = 0; i < nobj; ++i) obs.push_back(finset_obj(pick(rng, 1, 3)));
  VCategory amb = self_enriched_category(tag, obs);
  VCategory a = unit_category(tag);

  const int kind = pick(rng, 0, 2);
  const BaseObject m = finset_obj(kind == 0 ? 1 : 2);
  std::vector<int> mult = kind == 0   ? std::vector<int>{0}
                          : kind == 1 ? std::vector<int>{0, 1, 1, 1}
                                      : std::vector<int>{0, 1, 1, 0};
  VCategory b = monoid_category(tag, m, make_table_morphism(unit_obj(tag), m, {0}),
                                make_table_morphism(tensor_obj(m, m), m, std::move(mult)));

  // Diagram: an endomap respecting the monoid relation (f;f = f or f;f = id).
  const int dx = pick(rng, 0, nobj - 1);
  const BaseObject x = obs[size_t(dx)];
  std::vector<std::vector<int>> endos;
  std::vector<int> f(size_t(x.n), 0);
  while (true) {
    bool lawful = true;
    for (int v = 0; v < x.n && lawful; ++v) {
      int ff = f[size_t(f[size_t(v)])];
      if (kind == 1 && ff != f[size_t(v)]) lawful = false;
      if (kind == 2 && ff != v) lawful = false;
    }
    if (lawful) endos.push_back(f);
    int i = x.n - 1;
    for (; i >= 0; --i) {
      if (++f[size_t(i)] < x.n) break;
      f[size_t(i)] = 0;
    }
    if (i < 0) break;
  }
  const std::vector<int>& act = endos[size_t(pick(rng, 0, int(endos.size()) - 1))];

  VFunctor diag;
  diag.dom = b;
  diag.cod = amb;
  diag.object_map = {dx};
  std::vector<int> act_table = {hom_index(x, x, identity(x))};
  if (m.n == 2) act_table.push_back(hom_index(x, x, make_table_morphism(x, x, act)));
  diag.action = {make_table_morphism(m, amb.hom_ob(dx, dx), std::move(act_table))};

  // Weight: a left module carrier with an action respecting the same relation.
  const BaseObject p = finset_obj(pick(rng, 1, 2));
  std::vector<std::vector<int>> ts;
  std::vector<int> t(size_t(p.n), 0);
  while (true) {
    bool lawful = true;
    for (int v = 0; v < p.n && lawful; ++v) {
      int tt = t[size_t(t[size_t(v)])];
      if (kind == 1 && tt != t[size_t(v)]) lawful = false;
      if (kind == 2 && tt != v) lawful = false;
    }
    if (lawful) ts.push_back(t);
    int i = p.n - 1;
    for (; i >= 0; --i) {
      if (++t[size_t(i)] < p.n) break;
      t[size_t(i)] = 0;
    }
    if (i < 0) break;
  }
  const std::vector<int>& pact = ts[size_t(pick(rng, 0, int(ts.size()) - 1))];

  Profunctor phi;
  phi.source = a;
  phi.target = b;
  phi.components = {p};
  std::vector<int> lact(size_t(m.n) * p.n);
  for (int g = 0; g < m.n; ++g)
    for (int v = 0; v < p.n; ++v)
      lact[size_t(pure_tensor_index(m, p, g, v))] = g == 0 ? v : pact[size_t(v)];
  phi.left_action = {make_table_morphism(tensor_obj(m, p), p, std::move(lact))};
  phi.right_action = {right_unitor(p)};

  const int az = pick(rng, 0, nobj - 1);
  VFunctor apex = const_functor(amb, az);
  Profunctor ccod = hom_profunctor(apex, diag);

  ProfMap cocone;
  cocone.dom = phi;
  cocone.cod = ccod;
  const int carrier = ccod.at(0, 0).n;
  auto random_component = [&] {
    std::vector<int> tab(size_t(p.n));
    for (int v = 0; v < p.n; ++v) tab[size_t(v)] = pick(rng, 0, carrier - 1);
    return make_table_morphism(p, ccod.at(0, 0), std::move(tab));
  };
  cocone.components = {random_component()};
  if (pick(rng, 0, 1) == 0) {
    // Bias toward equivariant candidates when any exist.
    for (int tries = 0; tries < 64; ++tries) {
      if (check_profmap(cocone).ok()) break;
      cocone.components[0] = random_component();
    }
  }
  return {phi, diag, apex, cocone};
}

}  // namespace absolim::testgen
