#include "absolim/absolute.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absolim {

namespace {

std::string at_pair(int t, int s) {
  std::ostringstream os;
  os << "(t,s)=(" << t << "," << s << ")";
  return os.str();
}

std::string at_object(int c) {
  std::ostringstream os;
  os << "object " << c << ": ";
  return os.str();
}

// Id_dom -> hom_profunctor(f, f), components the functor's action maps.
ProfMap functor_action_map(const VFunctor& f) {
  ProfMap out;
  out.dom = identity_profunctor(f.dom);
  out.cod = hom_profunctor(f, f);
  for (int t = 0; t < f.dom.size(); ++t)
    for (int s = 0; s < f.dom.size(); ++s) out.components.push_back(f.act(t, s));
  return out;
}

void merge_prefixed(Report& into, const Report& from, const std::string& prefix) {
  for (const std::string& v : from.violations) into.violations.push_back(prefix + v);
}

}  // namespace

// --- colimit / limit / squares ------------------------------------------------

Report check_colimit(const ColimitCase& cc) {
  Report rep;
  const VCategory& amb = cc.diag.cod;
  if (cc.apex.cod != amb || cc.apex.dom != cc.weight.source ||
      cc.diag.dom != cc.weight.target) {
    rep.violations.push_back("weighted diagram endpoints do not match");
    return rep;
  }
  if (cc.cocone.dom != cc.weight || cc.cocone.cod != hom_profunctor(cc.apex, cc.diag)) {
    rep.violations.push_back("cocone has unexpected endpoints");
    return rep;
  }
  Report pm = check_profmap(cc.cocone);
  if (!pm.ok()) {
    merge_prefixed(rep, pm, "cocone: ");
    return rep;
  }
  const int nb = cc.weight.nt(), na = cc.weight.ns();
  for (int c = 0; c < amb.size(); ++c) {
    VFunctor probe = const_functor(amb, c);
    Profunctor m = hom_profunctor(probe, cc.apex);
    Profunctor l = hom_profunctor(probe, cc.diag);
    TensorPresentation pres = tensor_over(cc.weight, m);
    std::vector<BaseMorphism> family;
    for (int t = 0; t < nb; ++t)
      for (int mid = 0; mid < na; ++mid)
        family.push_back(seq(tensor_mor(cc.cocone.at(t, mid), identity(m.at(mid, 0))),
                             amb.mu(cc.diag.ob(t), cc.apex.ob(mid), c)));
    ProfMap u = induce_out_of_tensor(pres, family, l);
    Exhibition ex = exhibits_as_left_hom(pres, u);
    if (!ex.exhibits) merge_prefixed(rep, ex.detail, at_object(c));
  }
  return rep;
}

Report check_limit(const LimitCase& lc) {
  Report rep;
  const VCategory& amb = lc.diag.cod;
  if (lc.apex.cod != amb || lc.apex.dom != lc.coweight.target ||
      lc.diag.dom != lc.coweight.source) {
    rep.violations.push_back("weighted diagram endpoints do not match");
    return rep;
  }
  if (lc.cone.dom != lc.coweight || lc.cone.cod != hom_profunctor(lc.diag, lc.apex)) {
    rep.violations.push_back("cone has unexpected endpoints");
    return rep;
  }
  Report pm = check_profmap(lc.cone);
  if (!pm.ok()) {
    merge_prefixed(rep, pm, "cone: ");
    return rep;
  }
  const int na = lc.coweight.nt(), nb = lc.coweight.ns();
  for (int c = 0; c < amb.size(); ++c) {
    VFunctor probe = const_functor(amb, c);
    Profunctor n = hom_profunctor(lc.apex, probe);
    Profunctor l = hom_profunctor(lc.diag, probe);
    TensorPresentation pres = tensor_over(n, lc.coweight);
    std::vector<BaseMorphism> family;
    for (int mid = 0; mid < na; ++mid)
      for (int s = 0; s < nb; ++s)
        family.push_back(seq(tensor_mor(identity(n.at(0, mid)), lc.cone.at(mid, s)),
                             amb.mu(c, lc.apex.ob(mid), lc.diag.ob(s))));
    ProfMap u = induce_out_of_tensor(pres, family, l);
    Exhibition ex = exhibits_as_right_hom(pres, u);
    if (!ex.exhibits) merge_prefixed(rep, ex.detail, at_object(c));
  }
  return rep;
}

Report check_squares(const SquaresCase& sc) {
  Report rep;
  const Profunctor& phi = sc.adj.weight;
  const Profunctor& psi = sc.adj.coweight;
  const VCategory& amb = sc.diag.cod;
  if (phi.source != psi.target || phi.target != psi.source) {
    rep.violations.push_back("weight and coweight endpoints do not match");
    return rep;
  }
  if (sc.apex.cod != amb || sc.apex.dom != phi.source || sc.diag.dom != phi.target) {
    rep.violations.push_back("weighted diagram endpoints do not match");
    return rep;
  }
  if (sc.cocone.dom != phi || sc.cocone.cod != hom_profunctor(sc.apex, sc.diag)) {
    rep.violations.push_back("cocone has unexpected endpoints");
    return rep;
  }
  if (sc.cone.dom != psi || sc.cone.cod != hom_profunctor(sc.diag, sc.apex)) {
    rep.violations.push_back("cone has unexpected endpoints");
    return rep;
  }
  TensorPresentation psiphi = tensor_over(psi, phi);
  TensorPresentation phipsi = tensor_over(phi, psi);
  if (sc.adj.unit_map.dom != identity_profunctor(phi.source) ||
      sc.adj.unit_map.cod != psiphi.result) {
    rep.violations.push_back("unit map has unexpected endpoints");
    return rep;
  }
  if (sc.adj.counit_map.dom != phipsi.result ||
      sc.adj.counit_map.cod != identity_profunctor(phi.target)) {
    rep.violations.push_back("counit map has unexpected endpoints");
    return rep;
  }
  struct Pre {
    const ProfMap* m;
    const char* label;
  };
  for (Pre p : {Pre{&sc.cocone, "cocone: "}, Pre{&sc.cone, "cone: "},
                Pre{&sc.adj.unit_map, "unit map: "}, Pre{&sc.adj.counit_map, "counit map: "}}) {
    Report pm = check_profmap(*p.m);
    if (!pm.ok()) merge_prefixed(rep, pm, p.label);
  }
  if (!rep.ok()) return rep;
  const int na = phi.ns(), nb = phi.nt();

  {
    Profunctor homzz = hom_profunctor(sc.apex, sc.apex);
    std::vector<BaseMorphism> family;
    for (int t = 0; t < na; ++t)
      for (int mid = 0; mid < nb; ++mid)
        for (int s = 0; s < na; ++s)
          family.push_back(seq(tensor_mor(sc.cone.at(t, mid), sc.cocone.at(mid, s)),
                               amb.mu(sc.apex.ob(t), sc.diag.ob(mid), sc.apex.ob(s))));
    ProfMap paired = induce_out_of_tensor(psiphi, family, homzz);
    ProfMap lhs = compose_profmap(sc.adj.unit_map, paired);
    ProfMap rhs = functor_action_map(sc.apex);
    for (int t = 0; t < na; ++t)
      for (int s = 0; s < na; ++s)
        if (lhs.at(t, s) != rhs.at(t, s))
          rep.violations.push_back("unit square fails at " + at_pair(t, s));
  }
  {
    Profunctor homff = hom_profunctor(sc.diag, sc.diag);
    std::vector<BaseMorphism> family;
    for (int t = 0; t < nb; ++t)
      for (int mid = 0; mid < na; ++mid)
        for (int s = 0; s < nb; ++s)
          family.push_back(seq(tensor_mor(sc.cocone.at(t, mid), sc.cone.at(mid, s)),
                               amb.mu(sc.diag.ob(t), sc.apex.ob(mid), sc.diag.ob(s))));
    ProfMap paired = induce_out_of_tensor(phipsi, family, homff);
    ProfMap rhs = compose_profmap(sc.adj.counit_map, functor_action_map(sc.diag));
    for (int t = 0; t < nb; ++t)
      for (int s = 0; s < nb; ++s)
        if (paired.at(t, s) != rhs.at(t, s))
          rep.violations.push_back("counit square fails at " + at_pair(t, s));
  }
  return rep;
}

// --- derivations ----------------------------------------------------------------

DeriveResult derive_cone(const Adjunction& adj, const ColimitCase& cc) {
  DeriveResult dr;
  const VCategory& amb = cc.diag.cod;
  const Profunctor& phi = adj.weight;
  const Profunctor& psi = adj.coweight;
  if (cc.weight != phi) {
    dr.detail.violations.push_back("colimit weight is not the adjunction weight");
    return dr;
  }
  Report pm = check_profmap(cc.cocone);
  if (!pm.ok()) {
    for (const std::string& v : pm.violations) dr.detail.violations.push_back("cocone: " + v);
    return dr;
  }
  const int nb = phi.nt(), na = phi.ns();

  // Pairing against the diagram functor itself.
  Profunctor mf = hom_profunctor(cc.diag, cc.apex);
  Profunctor lf = hom_profunctor(cc.diag, cc.diag);
  TensorPresentation presf = tensor_over(phi, mf);
  std::vector<BaseMorphism> family;
  for (int t = 0; t < nb; ++t)
    for (int mid = 0; mid < na; ++mid)
      for (int s = 0; s < nb; ++s)
        family.push_back(seq(tensor_mor(cc.cocone.at(t, mid), identity(mf.at(mid, s))),
                             amb.mu(cc.diag.ob(t), cc.apex.ob(mid), cc.diag.ob(s))));
  ProfMap uf = induce_out_of_tensor(presf, family, lf);
  Exhibition ex = exhibits_as_left_hom(presf, uf);
  if (!ex.exhibits) {
    merge_prefixed(dr.detail, ex.detail, "pairing against the diagram: ");
    return dr;
  }

  EndPresentation endf = lifting_hom_left(phi, lf);
  TensorPresentation phipsi = tensor_over(phi, psi);
  ProfMap g = compose_profmap(adj.counit_map, functor_action_map(cc.diag));
  ProfMap tau = transpose_left(phipsi, endf, g);
  dr.derived = compose_profmap(tau, ex.kappa_inv);

  Report squares = check_squares({adj, cc.diag, cc.apex, cc.cocone, dr.derived});
  merge_prefixed(dr.detail, squares, "after derivation: ");
  dr.ok = dr.detail.ok();
  return dr;
}

DeriveResult derive_cocone(const Adjunction& adj, const LimitCase& lc) {
  DeriveResult dr;
  if (lc.coweight != adj.coweight) {
    dr.detail.violations.push_back("limit coweight is not the adjunction coweight");
    return dr;
  }
  ColimitCase ccop = dual_of_limit(lc);
  Adjunction adjop = dual_adjunction(adj);
  DeriveResult inner = derive_cone(adjop, ccop);
  merge_prefixed(dr.detail, inner.detail, "in the formal dual: ");
  if (!inner.ok) return dr;
  dr.derived = op_profmap(inner.derived);
  Report squares = check_squares({adj, lc.diag, lc.apex, dr.derived, lc.cone});
  merge_prefixed(dr.detail, squares, "after derivation: ");
  dr.ok = dr.detail.ok();
  return dr;
}

// --- squares imply colimiting, constructively -----------------------------------

ProfMap factor_through_colimit(const Adjunction& adj, const VFunctor& diag,
                               const VFunctor& apex, const ProfMap& cone,
                               const VFunctor& probe, const Profunctor& k, const ProfMap& f) {
  const Profunctor& phi = adj.weight;
  const Profunctor& psi = adj.coweight;
  const VCategory& amb = diag.cod;
  if (k.target != phi.source) throw CatError("factor: test module does not match the weight");
  TensorPresentation presk = tensor_over(phi, k);
  if (f.dom != presk.result || f.cod != hom_profunctor(probe, diag))
    throw CatError("factor: competing map has unexpected endpoints");

  UnitorPair lu = module_left_unitor(k);
  TensorPresentation psiphi = tensor_over(psi, phi);
  TensorPresentation pres2 = tensor_over(psiphi.result, k);
  ProfMap step1 = tensor_profmap(lu.pres, pres2, adj.unit_map, identity_profmap(k));
  ProfMap assoc = module_associator(psi, phi, k);
  TensorPresentation pres3 = tensor_over(psi, presk.result);
  TensorPresentation pres4 = tensor_over(psi, f.cod);
  ProfMap step2 = tensor_profmap(pres3, pres4, identity_profmap(psi), f);

  Profunctor m = hom_profunctor(probe, apex);
  const int na = psi.nt(), nb = psi.ns(), nw = k.ns();
  std::vector<BaseMorphism> family;
  for (int t = 0; t < na; ++t)
    for (int mid = 0; mid < nb; ++mid)
      for (int s = 0; s < nw; ++s)
        family.push_back(seq(tensor_mor(cone.at(t, mid), identity(f.cod.at(mid, s))),
                             amb.mu(apex.ob(t), diag.ob(mid), probe.ob(s))));
  ProfMap last = induce_out_of_tensor(pres4, family, m);

  return compose_profmap(
      compose_profmap(compose_profmap(compose_profmap(lu.inv, step1), assoc), step2), last);
}

Report colimit_from_squares(const SquaresCase& sc) {
  Report rep = check_squares(sc);
  if (!rep.ok()) return rep;
  const VCategory& amb = sc.diag.cod;
  const Profunctor& phi = sc.adj.weight;
  const int nb = phi.nt(), na = phi.ns();

  for (int c = 0; c < amb.size(); ++c) {
    VFunctor probe = const_functor(amb, c);
    Profunctor m = hom_profunctor(probe, sc.apex);
    Profunctor l = hom_profunctor(probe, sc.diag);
    TensorPresentation pres = tensor_over(phi, m);
    std::vector<BaseMorphism> family;
    for (int t = 0; t < nb; ++t)
      for (int mid = 0; mid < na; ++mid)
        family.push_back(seq(tensor_mor(sc.cocone.at(t, mid), identity(m.at(mid, 0))),
                             amb.mu(sc.diag.ob(t), sc.apex.ob(mid), c)));
    ProfMap u = induce_out_of_tensor(pres, family, l);

    EndPresentation end = lifting_hom_left(phi, l);
    ProfMap kappa = transpose_left(pres, end, u);
    TensorPresentation prese = tensor_over(phi, end.result);
    ProfMap evmap = end_evaluation_left(end, prese);
    ProfMap fbar = factor_through_colimit(sc.adj, sc.diag, sc.apex, sc.cone, probe,
                                          end.result, evmap);

    ProfMap idm = identity_profmap(m);
    ProfMap ide = identity_profmap(end.result);
    ProfMap sect = compose_profmap(kappa, fbar);
    ProfMap retr = compose_profmap(fbar, kappa);
    for (int t = 0; t < m.nt(); ++t)
      for (int s = 0; s < m.ns(); ++s) {
        if (sect.at(t, s) != idm.at(t, s))
          rep.violations.push_back(at_object(c) + "section identity fails at " + at_pair(t, s));
        if (retr.at(t, s) != ide.at(t, s))
          rep.violations.push_back(at_object(c) + "retraction identity fails at " +
                                   at_pair(t, s));
      }

    ProfMap route = compose_profmap(
        tensor_profmap(prese, pres, identity_profmap(phi), fbar), u);
    for (int t = 0; t < nb; ++t)
      if (route.at(t, 0) != evmap.at(t, 0))
        rep.violations.push_back(at_object(c) + "evaluation factorization fails at " +
                                 at_pair(t, 0));

    ProfMap selff = factor_through_colimit(sc.adj, sc.diag, sc.apex, sc.cone, probe, m, u);
    for (int t = 0; t < m.nt(); ++t)
      for (int s = 0; s < m.ns(); ++s)
        if (selff.at(t, s) != idm.at(t, s))
          rep.violations.push_back(at_object(c) + "uniqueness probe fails at " + at_pair(t, s));
  }
  return rep;
}

// --- formal duality ---------------------------------------------------------------

VCategory op_category(const VCategory& c) {
  VCategory out;
  out.tag = c.tag;
  out.objects = c.objects;
  const int n = c.size();
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) out.hom.push_back(c.hom_ob(a, b));
  out.unit = c.unit;
  for (int c2 = 0; c2 < n; ++c2)
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        out.comp.push_back(
            seq(braiding(c.hom_ob(b, c2), c.hom_ob(a, b)), c.mu(a, b, c2)));
  return out;
}

VFunctor op_functor(const VFunctor& f) {
  VFunctor out;
  out.dom = op_category(f.dom);
  out.cod = op_category(f.cod);
  out.object_map = f.object_map;
  const int n = f.dom.size();
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) out.action.push_back(f.act(a, b));
  return out;
}

Profunctor op_profunctor(const Profunctor& m) {
  Profunctor out;
  out.source = op_category(m.target);
  out.target = op_category(m.source);
  const int nt = m.ns(), ns = m.nt();  // transposed extents
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s) out.components.push_back(m.at(s, t));
  for (int t2 = 0; t2 < nt; ++t2)
    for (int t = 0; t < nt; ++t)
      for (int s = 0; s < ns; ++s)
        out.left_action.push_back(
            seq(braiding(m.source.hom_ob(t, t2), m.at(s, t)), m.ract(s, t, t2)));
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s)
      for (int s2 = 0; s2 < ns; ++s2)
        out.right_action.push_back(
            seq(braiding(m.at(s, t), m.target.hom_ob(s2, s)), m.lact(s2, s, t)));
  return out;
}

ProfMap op_profmap(const ProfMap& a) {
  ProfMap out;
  out.dom = op_profunctor(a.dom);
  out.cod = op_profunctor(a.cod);
  const int nt = a.dom.ns(), ns = a.dom.nt();
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s) out.components.push_back(a.at(s, t));
  return out;
}

ProfMap op_tensor_swap(const TensorPresentation& pres, const TensorPresentation& op_pres) {
  if (op_pres.n != op_profunctor(pres.m) || op_pres.m != op_profunctor(pres.n))
    throw CatError("op_tensor_swap: presentations are not opposite to each other");
  ProfMap out;
  out.dom = op_pres.result;
  out.cod = op_profunctor(pres.result);
  const int nt = op_pres.result.nt(), ns = op_pres.result.ns();
  const int nmid = op_pres.n.ns();
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      const TensorComponent& oc = op_pres.at(t, s);
      const TensorComponent& tc = pres.at(s, t);
      std::vector<BaseMorphism> blocks;
      for (int b = 0; b < nmid; ++b)
        blocks.push_back(seq(braiding(pres.m.at(b, t), pres.n.at(s, b)),
                             tc.sum.injections[b], tc.proj));
      BaseMorphism h = from_coproduct(oc.sum, blocks, pres.result.at(s, t));
      out.components.push_back(induce_from_coequalizer(oc.proj, h));
    }
  }
  return out;
}

Adjunction dual_adjunction(const Adjunction& adj) {
  Adjunction out;
  out.weight = op_profunctor(adj.coweight);
  out.coweight = op_profunctor(adj.weight);
  TensorPresentation psiphi = tensor_over(adj.coweight, adj.weight);
  TensorPresentation phipsi = tensor_over(adj.weight, adj.coweight);
  TensorPresentation op_unit_pres = tensor_over(out.coweight, out.weight);
  TensorPresentation op_counit_pres = tensor_over(out.weight, out.coweight);
  ProfMap swap_unit = op_tensor_swap(psiphi, op_unit_pres);
  ProfMap swap_counit = op_tensor_swap(phipsi, op_counit_pres);
  out.unit_map = compose_profmap(op_profmap(adj.unit_map), inverse_profmap(swap_unit));
  out.counit_map = compose_profmap(swap_counit, op_profmap(adj.counit_map));
  return out;
}

LimitCase dual_of_colimit(const ColimitCase& cc) {
  return {op_profunctor(cc.weight), op_functor(cc.diag), op_functor(cc.apex),
          op_profmap(cc.cocone)};
}

ColimitCase dual_of_limit(const LimitCase& lc) {
  return {op_profunctor(lc.coweight), op_functor(lc.diag), op_functor(lc.apex),
          op_profmap(lc.cone)};
}

// --- enumeration sweep --------------------------------------------------------------

namespace {

// Mixed-radix description of all candidate maps weight -> target profunctor.
// Pointed tables have their basepoint slot pinned, so only free slots vary.
struct CandidateSpace {
  const Profunctor* dom = nullptr;
  const Profunctor* cod = nullptr;
  std::vector<int> slot_t, slot_s, slot_e;  // free slots in component order
  std::vector<int> radix;
  long total = 1;

  void build(const Profunctor& d, const Profunctor& c, int max_hom_size) {
    dom = &d;
    cod = &c;
    const bool ptd = d.source.tag == BaseTag::finset_ptd;
    for (int t = 0; t < d.nt(); ++t) {
      for (int s = 0; s < d.ns(); ++s) {
        const int dn = d.at(t, s).n, cn = c.at(t, s).n;
        if (dn > max_hom_size || cn > max_hom_size)
          throw CatError("audit size bound exceeded");
        for (int e = ptd ? 1 : 0; e < dn; ++e) {
          slot_t.push_back(t);
          slot_s.push_back(s);
          slot_e.push_back(e);
          radix.push_back(cn);
          total *= cn;
          if (total > 20'000'000) throw CatError("audit candidate space too large");
          if (cn == 0) total = 0;
        }
      }
    }
  }

  ProfMap decode(long idx) const {
    std::vector<std::vector<int>> tables(size_t(dom->nt()) * dom->ns());
    const bool ptd = dom->source.tag == BaseTag::finset_ptd;
    for (int t = 0; t < dom->nt(); ++t)
      for (int s = 0; s < dom->ns(); ++s)
        tables[size_t(t) * dom->ns() + s].assign(size_t(dom->at(t, s).n), 0);
    (void)ptd;  // basepoint slots stay at 0
    for (int i = int(radix.size()) - 1; i >= 0; --i) {
      tables[size_t(slot_t[i]) * dom->ns() + slot_s[i]][size_t(slot_e[i])] =
          int(idx % radix[i]);
      idx /= radix[i];
    }
    ProfMap cand;
    cand.dom = *dom;
    cand.cod = *cod;
    for (int t = 0; t < dom->nt(); ++t)
      for (int s = 0; s < dom->ns(); ++s)
        cand.components.push_back(make_table_morphism(
            dom->at(t, s), cod->at(t, s), tables[size_t(t) * dom->ns() + s]));
    return cand;
  }
};

}  // namespace

AuditReport bijection_audit(const AuditSetup& setup, int max_hom_size, ExecMode mode) {
  const Profunctor& phi = setup.adj.weight;
  const Profunctor& psi = setup.adj.coweight;
  const BaseTag tag = phi.source.tag;
  if (tag != BaseTag::finset && tag != BaseTag::finset_ptd)
    throw CatError("audit supports the table bases only");

  AuditReport ar;
  Profunctor cocone_cod = hom_profunctor(setup.apex, setup.diag);
  Profunctor cone_cod = hom_profunctor(setup.diag, setup.apex);
  CandidateSpace aspace, bspace;
  aspace.build(phi, cocone_cod, max_hom_size);
  bspace.build(psi, cone_cod, max_hom_size);

  std::vector<uint8_t> a_equi(size_t(aspace.total), 0), a_col(size_t(aspace.total), 0);
  std::vector<uint8_t> b_equi(size_t(bspace.total), 0), b_lim(size_t(bspace.total), 0);

  const bool par = use_openmp(mode);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (long i = 0; i < aspace.total; ++i) {
    ProfMap cand = aspace.decode(i);
    if (!check_profmap(cand).ok()) continue;
    a_equi[size_t(i)] = 1;
    if (check_colimit({phi, setup.diag, setup.apex, cand}).ok()) a_col[size_t(i)] = 1;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#endif
  for (long i = 0; i < bspace.total; ++i) {
    ProfMap cand = bspace.decode(i);
    if (!check_profmap(cand).ok()) continue;
    b_equi[size_t(i)] = 1;
    if (check_limit({psi, setup.diag, setup.apex, cand}).ok()) b_lim[size_t(i)] = 1;
  }

  std::vector<long> a_eq_idx, b_eq_idx, a_col_idx, b_lim_idx;
  for (long i = 0; i < aspace.total; ++i) {
    if (a_equi[size_t(i)]) a_eq_idx.push_back(i);
    if (a_col[size_t(i)]) a_col_idx.push_back(i);
  }
  for (long i = 0; i < bspace.total; ++i) {
    if (b_equi[size_t(i)]) b_eq_idx.push_back(i);
    if (b_lim[size_t(i)]) b_lim_idx.push_back(i);
  }
  ar.cocone_candidates = aspace.total;
  ar.cone_candidates = bspace.total;
  ar.cocone_equivariant = long(a_eq_idx.size());
  ar.cone_equivariant = long(b_eq_idx.size());
  ar.cocone_count = long(a_col_idx.size());
  ar.cone_count = long(b_lim_idx.size());

  long pairs = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : pairs) if (par)
#endif
  for (size_t ia = 0; ia < a_eq_idx.size(); ++ia) {
    ProfMap a = aspace.decode(a_eq_idx[ia]);
    for (long ib : b_eq_idx) {
      ProfMap b = bspace.decode(ib);
      if (check_squares({setup.adj, setup.diag, setup.apex, a, b}).ok()) ++pairs;
    }
  }
  ar.pair_count = pairs;

  // Round trips between the two sides.
  for (long ia : a_col_idx) {
    ProfMap a = aspace.decode(ia);
    DeriveResult db = derive_cone(setup.adj, {phi, setup.diag, setup.apex, a});
    bool found = false;
    if (db.ok)
      for (long ib : b_lim_idx)
        if (bspace.decode(ib) == db.derived) found = true;
    if (!db.ok || !found) {
      ar.roundtrips_ok = false;
      ar.notes.push_back("derived cone of cocone candidate " + std::to_string(ia) +
                         " is not among the limiting cones");
      continue;
    }
    DeriveResult da = derive_cocone(setup.adj, {psi, setup.diag, setup.apex, db.derived});
    if (!da.ok || !(da.derived == a)) {
      ar.roundtrips_ok = false;
      ar.notes.push_back("round trip through the derived cone does not return cocone " +
                         std::to_string(ia));
    }
  }
  for (long ib : b_lim_idx) {
    ProfMap b = bspace.decode(ib);
    DeriveResult da = derive_cocone(setup.adj, {psi, setup.diag, setup.apex, b});
    bool found = false;
    if (da.ok)
      for (long ia : a_col_idx)
        if (aspace.decode(ia) == da.derived) found = true;
    if (!da.ok || !found) {
      ar.roundtrips_ok = false;
      ar.notes.push_back("derived cocone of cone candidate " + std::to_string(ib) +
                         " is not among the colimiting cocones");
      continue;
    }
    DeriveResult db = derive_cone(setup.adj, {phi, setup.diag, setup.apex, da.derived});
    if (!db.ok || !(db.derived == b)) {
      ar.roundtrips_ok = false;
      ar.notes.push_back("round trip through the derived cocone does not return cone " +
                         std::to_string(ib));
    }
  }
  return ar;
}

// --- element-level oracle -----------------------------------------------------------

Report oracle_colimit(const ColimitCase& cc) {
  Report rep;
  const VCategory& amb = cc.diag.cod;
  if (amb.tag != BaseTag::finset) throw CatError("oracle supports the finset base only");
  if (cc.apex.cod != amb || cc.apex.dom != cc.weight.source ||
      cc.diag.dom != cc.weight.target) {
    rep.violations.push_back("weighted diagram endpoints do not match");
    return rep;
  }
  if (cc.cocone.dom != cc.weight || cc.cocone.cod != hom_profunctor(cc.apex, cc.diag)) {
    rep.violations.push_back("cocone has unexpected endpoints");
    return rep;
  }
  const Profunctor& phi = cc.weight;
  const int nb = phi.nt(), na = phi.ns();

  // Module-map check straight off the raw tables before probing.
  for (int b2 = 0; b2 < nb; ++b2)
    for (int b = 0; b < nb; ++b)
      for (int s = 0; s < na; ++s) {
        const int hn = phi.target.hom_ob(b2, b).n, sz = phi.at(b, s).n;
        const int out = amb.hom_ob(cc.diag.ob(b), cc.apex.ob(s)).n;
        const std::vector<int>& wact = phi.lact(b2, b, s).table;
        const std::vector<int>& fact = cc.diag.act(b2, b).table;
        const std::vector<int>& mu =
            amb.mu(cc.diag.ob(b2), cc.diag.ob(b), cc.apex.ob(s)).table;
        for (int beta = 0; beta < hn; ++beta)
          for (int v = 0; v < sz; ++v)
            if (cc.cocone.at(b2, s).table[size_t(wact[size_t(beta) * sz + v])] !=
                mu[size_t(fact[size_t(beta)]) * out +
                   cc.cocone.at(b, s).table[size_t(v)]]) {
              rep.violations.push_back("cocone is not a module map at " + at_pair(b2, s));
              return rep;
            }
      }
  for (int b = 0; b < nb; ++b)
    for (int s = 0; s < na; ++s)
      for (int s2 = 0; s2 < na; ++s2) {
        const int an = phi.source.hom_ob(s, s2).n, sz = phi.at(b, s).n;
        const int out2 = amb.hom_ob(cc.apex.ob(s), cc.apex.ob(s2)).n;
        const std::vector<int>& wract = phi.ract(b, s, s2).table;
        const std::vector<int>& aact = cc.apex.act(s, s2).table;
        const std::vector<int>& mu =
            amb.mu(cc.diag.ob(b), cc.apex.ob(s), cc.apex.ob(s2)).table;
        for (int v = 0; v < sz; ++v)
          for (int al = 0; al < an; ++al)
            if (cc.cocone.at(b, s2).table[size_t(wract[size_t(v) * an + al])] !=
                mu[size_t(cc.cocone.at(b, s).table[size_t(v)]) * out2 +
                   aact[size_t(al)]]) {
              rep.violations.push_back("cocone is not a module map at " + at_pair(b, s2));
              return rep;
            }
      }

  for (int c = 0; c < amb.size(); ++c) {
    for (int a = 0; a < na; ++a) {
      std::vector<int> off(nb + 1, 0), sz(nb), out(nb);
      long total = 1;
      for (int b = 0; b < nb; ++b) {
        sz[b] = phi.at(b, a).n;
        out[b] = amb.hom_ob(cc.diag.ob(b), c).n;
        off[b + 1] = off[b] + sz[b];
        for (int v = 0; v < sz[b]; ++v) {
          total *= out[b];
          if (total > 5'000'000) throw CatError("oracle component too large to enumerate");
        }
        if (out[b] == 0 && sz[b] > 0) total = 0;
      }
      const int slots = off[nb];

      std::set<std::vector<int>> natural;
      std::vector<int> fam(slots, 0);
      bool more = total > 0;
      while (more) {
        bool ok = true;
        for (int b2 = 0; b2 < nb && ok; ++b2) {
          for (int b = 0; b < nb && ok; ++b) {
            const int hn = phi.target.hom_ob(b2, b).n;
            const std::vector<int>& wact = phi.lact(b2, b, a).table;
            const std::vector<int>& fact = cc.diag.act(b2, b).table;
            const std::vector<int>& mu =
                amb.mu(cc.diag.ob(b2), cc.diag.ob(b), c).table;
            for (int beta = 0; beta < hn && ok; ++beta)
              for (int v = 0; v < sz[b] && ok; ++v) {
                const int lhs = fam[off[b2] + wact[size_t(beta) * sz[b] + v]];
                const int rhs = mu[size_t(fact[size_t(beta)]) * out[b] + fam[off[b] + v]];
                if (lhs != rhs) ok = false;
              }
          }
        }
        if (ok) natural.insert(fam);
        int i = slots - 1;
        for (; i >= 0; --i) {
          int b = 0;
          while (off[b + 1] <= i) ++b;
          if (++fam[i] < out[b]) break;
          fam[i] = 0;
        }
        if (i < 0) more = false;
      }

      const int apexhom = amb.hom_ob(cc.apex.ob(a), c).n;
      std::set<std::vector<int>> image;
      bool injective = true, contained = true;
      for (int h = 0; h < apexhom; ++h) {
        std::vector<int> f(slots, 0);
        for (int b = 0; b < nb; ++b) {
          const std::vector<int>& mu = amb.mu(cc.diag.ob(b), cc.apex.ob(a), c).table;
          const std::vector<int>& leg = cc.cocone.at(b, a).table;
          for (int v = 0; v < sz[b]; ++v)
            f[off[b] + v] = mu[size_t(leg[size_t(v)]) * apexhom + h];
        }
        if (!natural.count(f)) contained = false;
        if (!image.insert(f).second) injective = false;
      }
      std::ostringstream where;
      where << "object " << c << " weight column " << a << ": ";
      if (!contained)
        rep.violations.push_back(where.str() + "comparison image not action-compatible");
      if (!injective) rep.violations.push_back(where.str() + "comparison map not injective");
      if (contained && injective && image.size() != natural.size()) {
        std::ostringstream os;
        os << where.str() << "comparison map not surjective: hits " << image.size() << " of "
           << natural.size() << " families";
        rep.violations.push_back(os.str());
      }
    }
  }
  return rep;
}

}  // namespace absolim
