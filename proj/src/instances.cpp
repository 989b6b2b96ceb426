#include "absolim/instances.hpp"

#include <algorithm>

namespace absolim {

namespace {

BaseMorphism inv(const BaseMorphism& f) {
  auto r = is_iso(f);
  if (!r) throw CatError("fixture construction expected an invertible morphism");
  return *r;
}

BaseObject small_object(BaseTag tag) {
  switch (tag) {
    case BaseTag::finset:
      return finset_obj(0);
    case BaseTag::finset_ptd:
      return finset_ptd_obj(1);
    case BaseTag::matq:
      return matq_obj(0);
    case BaseTag::suplat: {
      Lat l;
      l.n = 1;
      l.leq = {1};
      return suplat_obj(l);
    }
  }
  throw CatError("unknown base tag");
}

Lat two_chain() {
  Lat l;
  l.n = 2;
  l.leq = {1, 1, 0, 1};
  return l;
}

}  // namespace

VCategory self_enriched_category(BaseTag tag, const std::vector<BaseObject>& objects) {
  VCategory c;
  c.tag = tag;
  c.objects = objects;
  const int n = int(objects.size());
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) c.hom.push_back(hom_left(objects[b], objects[a]));
  for (int a = 0; a < n; ++a)
    c.unit.push_back(curry_left(objects[a], unit_obj(tag), right_unitor(objects[a])));
  for (int c2 = 0; c2 < n; ++c2)
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        const BaseObject& x = objects[c2];
        const BaseObject hcb = c.hom_ob(c2, b), hba = c.hom_ob(b, a);
        BaseMorphism body = seq(inv(associator(x, hcb, hba)),
                                tensor_mor(ev_left(x, objects[b]), identity(hba)),
                                ev_left(objects[b], objects[a]));
        c.comp.push_back(curry_left(x, tensor_obj(hcb, hba), body));
      }
  return c;
}

VCategory empty_category(BaseTag tag) {
  VCategory c;
  c.tag = tag;
  return c;
}

VCategory discrete_category(BaseTag tag, int k) {
  VCategory c;
  c.tag = tag;
  const BaseObject i = unit_obj(tag), z = small_object(tag);
  for (int a = 0; a < k; ++a) c.objects.push_back(i);
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) c.hom.push_back(b == a ? i : z);
  for (int a = 0; a < k; ++a) c.unit.push_back(identity(i));
  for (int c2 = 0; c2 < k; ++c2)
    for (int b = 0; b < k; ++b)
      for (int a = 0; a < k; ++a) {
        if (c2 == b && b == a) {
          c.comp.push_back(left_unitor(i));
        } else {
          c.comp.push_back(
              zero_morphism(tensor_obj(c.hom_ob(c2, b), c.hom_ob(b, a)), c.hom_ob(c2, a)));
        }
      }
  return c;
}

VCategory monoid_category(BaseTag tag, const BaseObject& carrier,
                          const BaseMorphism& unit_elt, const BaseMorphism& mult) {
  if (unit_elt.dom != unit_obj(tag) || unit_elt.cod != carrier)
    throw CatError("monoid unit has unexpected endpoints");
  if (mult.dom != tensor_obj(carrier, carrier) || mult.cod != carrier)
    throw CatError("monoid multiplication has unexpected endpoints");
  VCategory c;
  c.tag = tag;
  c.objects = {unit_obj(tag)};
  c.hom = {carrier};
  c.unit = {unit_elt};
  c.comp = {mult};
  return c;
}

VCategory group_algebra_category(const std::vector<std::vector<int>>& mult) {
  const int n = int(mult.size());
  if (n == 0) throw CatError("group table is empty");
  for (const auto& row : mult)
    if (int(row.size()) != n) throw CatError("group table is not square");
  for (int j = 0; j < n; ++j)
    if (mult[0][size_t(j)] != j || mult[size_t(j)][0] != j)
      throw CatError("group table identity must sit at index 0");
  const BaseObject qg = matq_obj(n);
  QMat u(n, 1);
  u.at(0, 0) = 1;
  QMat comp(n, n * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      comp.at(mult[size_t(h)][size_t(g)], pure_tensor_index(qg, qg, g, h)) = 1;
  return monoid_category(BaseTag::matq, qg,
                         make_matq_morphism(unit_obj(BaseTag::matq), qg, std::move(u)),
                         make_matq_morphism(tensor_obj(qg, qg), qg, std::move(comp)));
}

BaseMorphism zero_morphism(const BaseObject& dom, const BaseObject& cod) {
  if (dom.tag == BaseTag::matq)
    return make_matq_morphism(dom, cod, QMat(cod.n, dom.n));
  if (cod.n == 0 && dom.n > 0) throw CatError("zero_morphism: empty codomain");
  return make_table_morphism(dom, cod, std::vector<int>(size_t(dom.n), 0));
}

BaseMorphism superpose(const BaseMorphism& a, const BaseMorphism& b) {
  if (a.dom != b.dom || a.cod != b.cod) throw CatError("superpose: endpoint mismatch");
  if (a.tag == BaseTag::matq) return make_matq_morphism(a.dom, a.cod, a.mat + b.mat);
  if (a.tag == BaseTag::suplat) {
    auto jt = join_table(a.cod.lat);
    std::vector<int> t(a.table.size());
    for (size_t i = 0; i < t.size(); ++i)
      t[i] = jt[size_t(a.table[i]) * a.cod.n + b.table[i]];
    return make_table_morphism(a.dom, a.cod, std::move(t));
  }
  throw CatError("superpose: base has no canonical superposition");
}

Profunctor discrete_weight(const VCategory& point, const VCategory& disc) {
  Profunctor w;
  w.source = point;
  w.target = disc;
  const int k = disc.size();
  const BaseObject i = unit_obj(disc.tag);
  for (int t = 0; t < k; ++t) w.components.push_back(i);
  for (int t2 = 0; t2 < k; ++t2)
    for (int t = 0; t < k; ++t)
      w.left_action.push_back(t2 == t ? left_unitor(i)
                                      : zero_morphism(tensor_obj(disc.hom_ob(t2, t), i), i));
  for (int t = 0; t < k; ++t) w.right_action.push_back(right_unitor(i));
  return w;
}

Profunctor discrete_coweight(const VCategory& disc, const VCategory& point) {
  Profunctor w;
  w.source = disc;
  w.target = point;
  const int k = disc.size();
  const BaseObject i = unit_obj(disc.tag);
  for (int s = 0; s < k; ++s) w.components.push_back(i);
  for (int s = 0; s < k; ++s) w.left_action.push_back(left_unitor(i));
  for (int s = 0; s < k; ++s)
    for (int s2 = 0; s2 < k; ++s2)
      w.right_action.push_back(s == s2 ? right_unitor(i)
                                       : zero_morphism(tensor_obj(i, disc.hom_ob(s, s2)), i));
  return w;
}

VFunctor discrete_diagram(const VCategory& disc, const VCategory& amb,
                          const std::vector<int>& obs) {
  VFunctor f;
  f.dom = disc;
  f.cod = amb;
  f.object_map = obs;
  const int k = disc.size();
  for (int b = 0; b < k; ++b)
    for (int a = 0; a < k; ++a) {
      if (b == a)
        f.action.push_back(amb.unit[size_t(obs[size_t(a)])]);
      else
        f.action.push_back(zero_morphism(disc.hom_ob(b, a),
                                         amb.hom_ob(obs[size_t(b)], obs[size_t(a)])));
    }
  return f;
}

namespace {

// Unit component I -> T(psi, phi)(0, 0) hitting the classes of 1 (x) 1 over
// the listed middle objects, superposed. Requires both modules to have unit
// carriers at those slots.
BaseMorphism unit_through(const TensorPresentation& pres, const std::vector<int>& mids) {
  const TensorComponent& comp = pres.at(0, 0);
  const BaseObject i = unit_obj(pres.result.source.tag);
  if (mids.empty()) return zero_morphism(i, pres.result.at(0, 0));
  BaseMorphism acc;
  for (size_t k = 0; k < mids.size(); ++k) {
    BaseMorphism m =
        seq(inv(left_unitor(i)), comp.sum.injections[size_t(mids[k])], comp.proj);
    acc = k == 0 ? m : superpose(acc, m);
  }
  return acc;
}

BaseMorphism counit_through(const TensorPresentation& pres, int t, int s,
                            const BaseMorphism& h) {
  return induce_from_coequalizer(pres.at(t, s).proj, h);
}

Fixture make_idempotent(bool split) {
  const BaseTag tag = BaseTag::finset;
  std::vector<BaseObject> obs = {finset_obj(2)};
  if (split) obs.push_back(finset_obj(1));
  VCategory amb = self_enriched_category(tag, obs);
  VCategory a = unit_category(tag);

  const BaseObject x = finset_obj(2), m = finset_obj(2), pt = finset_obj(1);
  VCategory b = monoid_category(tag, m, make_table_morphism(unit_obj(tag), m, {0}),
                                make_table_morphism(tensor_obj(m, m), m, {0, 1, 1, 1}));

  VFunctor diag;
  diag.dom = b;
  diag.cod = amb;
  diag.object_map = {0};
  const int id_idx = hom_index(x, x, identity(x));
  const int e_idx = hom_index(x, x, make_table_morphism(x, x, {0, 0}));
  diag.action = {make_table_morphism(m, amb.hom_ob(0, 0), {id_idx, e_idx})};

  VFunctor apex = const_functor(amb, split ? 1 : 0);

  // Weight and coweight: the one-element right and left ideals of the idempotent.
  Profunctor phi;
  phi.source = a;
  phi.target = b;
  phi.components = {pt};
  phi.left_action = {make_table_morphism(tensor_obj(m, pt), pt, {0, 0})};
  phi.right_action = {make_table_morphism(tensor_obj(pt, unit_obj(tag)), pt, {0})};
  Profunctor psi;
  psi.source = b;
  psi.target = a;
  psi.components = {pt};
  psi.left_action = {make_table_morphism(tensor_obj(unit_obj(tag), pt), pt, {0})};
  psi.right_action = {make_table_morphism(tensor_obj(pt, m), pt, {0, 0})};

  Adjunction adj;
  adj.weight = phi;
  adj.coweight = psi;
  TensorPresentation up = tensor_over(psi, phi);
  adj.unit_map = {identity_profunctor(a), up.result, {unit_through(up, {0})}};
  TensorPresentation cp = tensor_over(phi, psi);
  adj.counit_map = {cp.result,
                    identity_profunctor(b),
                    {counit_through(cp, 0, 0, make_table_morphism(cp.at(0, 0).sum.obj, m, {1}))}};

  Profunctor ccod = hom_profunctor(apex, diag);
  Profunctor lcod = hom_profunctor(diag, apex);
  ProfMap cocone{phi, ccod, {}};
  ProfMap cone{psi, lcod, {}};
  if (split) {
    cocone.components = {make_table_morphism(pt, ccod.at(0, 0), {0})};
    const int sect = hom_index(pt, x, make_table_morphism(pt, x, {0}));
    cone.components = {make_table_morphism(pt, lcod.at(0, 0), {sect})};
  } else {
    cocone.components = {make_table_morphism(pt, ccod.at(0, 0), {e_idx})};
    cone.components = {make_table_morphism(pt, lcod.at(0, 0), {e_idx})};
  }

  Fixture fx;
  fx.name = split ? "idempotent-split" : "idempotent-unsplit";
  fx.summary = split
                   ? "retract of a two-point set splitting an idempotent endomap"
                   : "the same idempotent over an ambient category missing the retract";
  fx.scase = {adj, diag, apex, cocone, cone};
  fx.expected_pass = split;
  return fx;
}

Fixture make_pointed(bool pass) {
  const BaseTag tag = BaseTag::finset_ptd;
  VCategory amb = self_enriched_category(
      tag, {finset_ptd_obj(1), finset_ptd_obj(2), finset_ptd_obj(3)});
  VCategory a = unit_category(tag);
  VCategory b = empty_category(tag);

  Profunctor phi;
  phi.source = a;
  phi.target = b;
  Profunctor psi;
  psi.source = b;
  psi.target = a;

  VFunctor diag;
  diag.dom = b;
  diag.cod = amb;
  VFunctor apex = const_functor(amb, pass ? 0 : 1);

  Adjunction adj;
  adj.weight = phi;
  adj.coweight = psi;
  TensorPresentation up = tensor_over(psi, phi);
  adj.unit_map = {identity_profunctor(a), up.result, {unit_through(up, {})}};
  TensorPresentation cp = tensor_over(phi, psi);
  adj.counit_map = {cp.result, identity_profunctor(b), {}};

  ProfMap cocone{phi, hom_profunctor(apex, diag), {}};
  ProfMap cone{psi, hom_profunctor(diag, apex), {}};

  Fixture fx;
  fx.name = pass ? "pointed-zero" : "pointed-nonzero";
  fx.summary = pass ? "one-point pointed set as the empty colimit"
                    : "two-point pointed set wrongly claimed as the empty colimit";
  fx.scase = {adj, diag, apex, cocone, cone};
  fx.expected_pass = pass;
  return fx;
}

Fixture make_biproduct(bool perturbed) {
  const BaseTag tag = BaseTag::matq;
  VCategory amb =
      self_enriched_category(tag, {matq_obj(1), matq_obj(1), matq_obj(2)});
  VCategory a = unit_category(tag);
  VCategory b = discrete_category(tag, 2);
  Profunctor phi = discrete_weight(a, b);
  Profunctor psi = discrete_coweight(b, a);
  VFunctor diag = discrete_diagram(b, amb, {0, 1});
  VFunctor apex = const_functor(amb, 2);
  const BaseObject i = unit_obj(tag);

  Adjunction adj;
  adj.weight = phi;
  adj.coweight = psi;
  TensorPresentation up = tensor_over(psi, phi);
  adj.unit_map = {identity_profunctor(a), up.result, {unit_through(up, {0, 1})}};
  TensorPresentation cp = tensor_over(phi, psi);
  std::vector<BaseMorphism> eps;
  for (int t = 0; t < 2; ++t)
    for (int s = 0; s < 2; ++s) {
      BaseMorphism h = t == s ? left_unitor(i)
                              : zero_morphism(cp.at(t, s).sum.obj, b.hom_ob(t, s));
      eps.push_back(counit_through(cp, t, s, h));
    }
  adj.counit_map = {cp.result, identity_profunctor(b), eps};

  Profunctor ccod = hom_profunctor(apex, diag);
  Profunctor lcod = hom_profunctor(diag, apex);
  QMat i0(2, 1), i1(2, 1), p0(1, 2), p1(1, 2);
  i0.at(0, 0) = 1;
  i1.at(1, 0) = 1;
  p0.at(0, 0) = 1;
  p1.at(0, 1) = 1;
  if (perturbed) i0.at(1, 0) = 1;
  ProfMap cocone{phi,
                 ccod,
                 {make_matq_morphism(i, ccod.at(0, 0), flatten_hom(i0)),
                  make_matq_morphism(i, ccod.at(1, 0), flatten_hom(i1))}};
  ProfMap cone{psi,
               lcod,
               {make_matq_morphism(i, lcod.at(0, 0), flatten_hom(p0)),
                make_matq_morphism(i, lcod.at(0, 1), flatten_hom(p1))}};

  Fixture fx;
  fx.name = perturbed ? "biproduct-perturbed" : "biproduct";
  fx.summary = perturbed
                   ? "direct sum of two lines with one injection entry corrupted"
                   : "direct sum of two lines with its injections and projections";
  fx.scase = {adj, diag, apex, cocone, cone};
  fx.expected_pass = !perturbed;
  return fx;
}

Fixture make_suplat(int legs) {
  const BaseTag tag = BaseTag::suplat;
  const BaseObject vb = suplat_obj(two_chain());
  const BaseObject i = unit_obj(tag);

  // Keep every hom lattice at most two elements: larger endomorphism
  // lattices are free on several generators and their iterated tensors
  // grow past any enumerable size.
  BaseObject z;
  std::vector<BaseObject> leg_ob;
  std::vector<BaseMorphism> injs, projs;
  std::vector<BaseObject> ambobs;
  std::vector<int> leg_idx;
  int apex_idx = 0;
  if (legs == 0) {
    z = small_object(tag);
    ambobs = {vb, z};
    apex_idx = 1;
  } else if (legs == 1) {
    z = vb;
    leg_ob = {vb};
    injs = {identity(vb)};
    projs = {identity(vb)};
    ambobs = {vb};
    leg_idx = {0};
    apex_idx = 0;
  } else {
    leg_ob = {vb, small_object(tag)};
    auto zc = coproduct(tag, leg_ob);
    auto zp = product(tag, leg_ob);
    if (zp.obj != zc.obj) throw CatError("lattice biproduct carriers disagree");
    z = zc.obj;
    injs = zc.injections;
    projs = zp.projections;
    ambobs = {leg_ob[0], leg_ob[1], z};
    leg_idx = {0, 1};
    apex_idx = 2;
  }

  VCategory amb = self_enriched_category(tag, ambobs);
  VCategory a = unit_category(tag);
  VCategory b = legs == 0 ? empty_category(tag) : discrete_category(tag, legs);
  Profunctor phi = discrete_weight(a, b);
  Profunctor psi = discrete_coweight(b, a);
  VFunctor diag = discrete_diagram(b, amb, leg_idx);
  VFunctor apex = const_functor(amb, apex_idx);

  Adjunction adj;
  adj.weight = phi;
  adj.coweight = psi;
  TensorPresentation up = tensor_over(psi, phi);
  std::vector<int> mids(static_cast<size_t>(legs));
  for (int k = 0; k < legs; ++k) mids[size_t(k)] = k;
  adj.unit_map = {identity_profunctor(a), up.result, {unit_through(up, mids)}};
  TensorPresentation cp = tensor_over(phi, psi);
  std::vector<BaseMorphism> eps;
  for (int t = 0; t < legs; ++t)
    for (int s = 0; s < legs; ++s) {
      BaseMorphism h = t == s ? left_unitor(i)
                              : zero_morphism(cp.at(t, s).sum.obj, b.hom_ob(t, s));
      eps.push_back(counit_through(cp, t, s, h));
    }
  adj.counit_map = {cp.result, identity_profunctor(b), eps};

  Profunctor ccod = hom_profunctor(apex, diag);
  Profunctor lcod = hom_profunctor(diag, apex);
  ProfMap cocone{phi, ccod, {}};
  ProfMap cone{psi, lcod, {}};
  for (int t = 0; t < legs; ++t)
    cocone.components.push_back(make_table_morphism(
        i, ccod.at(t, 0), {0, hom_index(leg_ob[size_t(t)], z, injs[size_t(t)])}));
  for (int s = 0; s < legs; ++s)
    cone.components.push_back(make_table_morphism(
        i, lcod.at(0, s), {0, hom_index(z, leg_ob[size_t(s)], projs[size_t(s)])}));

  Fixture fx;
  fx.name = legs == 0 ? "suplat-initial" : legs == 1 ? "suplat-identity" : "suplat-pair";
  fx.summary = legs == 0 ? "one-element lattice as the empty colimit"
               : legs == 1
                   ? "a lattice as the colimit of itself along an identity leg"
                   : "product lattice as the coproduct of a chain and a point";
  fx.scase = {adj, diag, apex, cocone, cone};
  fx.expected_pass = true;
  return fx;
}

Fixture make_burnside(bool sym3, bool normalized) {
  std::vector<std::vector<int>> perms;
  if (sym3)
    perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  else
    perms = {{0, 1}, {1, 0}};
  const int n = int(perms.size());
  const int d = int(perms[0].size());

  std::vector<std::vector<int>> mult(size_t(n), std::vector<int>(size_t(n), -1));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      std::vector<int> comp(static_cast<size_t>(d));
      for (int k = 0; k < d; ++k) comp[size_t(k)] = perms[size_t(g)][size_t(perms[size_t(h)][size_t(k)])];
      for (int j = 0; j < n; ++j)
        if (perms[size_t(j)] == comp) mult[size_t(g)][size_t(h)] = j;
      if (mult[size_t(g)][size_t(h)] < 0) throw CatError("permutations do not close");
    }

  VCategory b = group_algebra_category(mult);
  VCategory amb = self_enriched_category(BaseTag::matq, {matq_obj(d), matq_obj(1)});
  VCategory a = unit_category(BaseTag::matq);
  const BaseObject qg = matq_obj(n), q1 = matq_obj(1);

  VFunctor diag;
  diag.dom = b;
  diag.cod = amb;
  diag.object_map = {0};
  QMat rep(d * d, n);
  for (int g = 0; g < n; ++g) {
    QMat pg(d, d);
    for (int k = 0; k < d; ++k) pg.at(perms[size_t(g)][size_t(k)], k) = 1;
    QMat col = flatten_hom(pg);
    for (int r = 0; r < d * d; ++r) rep.at(r, g) = col.at(r, 0);
  }
  diag.action = {make_matq_morphism(qg, amb.hom_ob(0, 0), std::move(rep))};
  VFunctor apex = const_functor(amb, 1);

  QMat aug(1, n);
  for (int g = 0; g < n; ++g) aug.at(0, g) = 1;
  Profunctor phi;
  phi.source = a;
  phi.target = b;
  phi.components = {q1};
  phi.left_action = {make_matq_morphism(tensor_obj(qg, q1), q1, aug)};
  phi.right_action = {right_unitor(q1)};
  Profunctor psi;
  psi.source = b;
  psi.target = a;
  psi.components = {q1};
  psi.left_action = {left_unitor(q1)};
  psi.right_action = {make_matq_morphism(tensor_obj(q1, qg), q1, aug)};

  Adjunction adj;
  adj.weight = phi;
  adj.coweight = psi;
  TensorPresentation up = tensor_over(psi, phi);
  adj.unit_map = {identity_profunctor(a), up.result, {unit_through(up, {0})}};
  TensorPresentation cp = tensor_over(phi, psi);
  QMat avg(n, 1);
  for (int g = 0; g < n; ++g) avg.at(g, 0) = normalized ? Rat(1, n) : Rat(1);
  adj.counit_map = {
      cp.result,
      identity_profunctor(b),
      {counit_through(cp, 0, 0, make_matq_morphism(cp.at(0, 0).sum.obj, qg, avg))}};

  Profunctor ccod = hom_profunctor(apex, diag);
  Profunctor lcod = hom_profunctor(diag, apex);
  QMat proj(1, d), sect(d, 1);
  for (int k = 0; k < d; ++k) {
    proj.at(0, k) = Rat(1, d);
    sect.at(k, 0) = 1;
  }
  ProfMap cocone{phi, ccod, {make_matq_morphism(q1, ccod.at(0, 0), flatten_hom(proj))}};
  ProfMap cone{psi, lcod, {make_matq_morphism(q1, lcod.at(0, 0), flatten_hom(sect))}};

  Fixture fx;
  fx.name = sym3 ? "burnside-s3" : normalized ? "burnside-c2" : "burnside-c2-unnormalized";
  fx.summary = sym3 ? "invariants of the permutation action of the symmetric group on three letters"
               : normalized
                   ? "invariants of the two-element group swapping coordinates"
                   : "the swap action with the averaging idempotent left unnormalized";
  fx.scase = {adj, diag, apex, cocone, cone};
  fx.expected_pass = normalized;
  return fx;
}

}  // namespace

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fxs = [] {
    std::vector<Fixture> v;
    v.push_back(make_idempotent(true));
    v.push_back(make_idempotent(false));
    v.push_back(make_pointed(true));
    v.push_back(make_pointed(false));
    v.push_back(make_biproduct(false));
    v.push_back(make_biproduct(true));
    v.push_back(make_suplat(0));
    v.push_back(make_suplat(1));
    v.push_back(make_suplat(2));
    v.push_back(make_burnside(false, true));
    v.push_back(make_burnside(true, true));
    v.push_back(make_burnside(false, false));
    return v;
  }();
  return fxs;
}

const Fixture& fixture(const std::string& name) {
  for (const Fixture& fx : builtin_fixtures())
    if (fx.name == name) return fx;
  throw CatError("unknown example '" + name + "'");
}

ColimitCase colimit_case(const Fixture& fx) {
  return {fx.scase.adj.weight, fx.scase.diag, fx.scase.apex, fx.scase.cocone};
}

LimitCase limit_case(const Fixture& fx) {
  return {fx.scase.adj.coweight, fx.scase.diag, fx.scase.apex, fx.scase.cone};
}

AuditSetup audit_setup(const Fixture& fx) {
  return {fx.scase.adj, fx.scase.diag, fx.scase.apex};
}

}  // namespace absolim
