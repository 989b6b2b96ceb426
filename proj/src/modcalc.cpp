#include "absolim/modcalc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace absolim {

namespace {

BaseMorphism associator_inv(const BaseObject& a, const BaseObject& b, const BaseObject& c) {
  auto inv = is_iso(associator(a, b, c));
  if (!inv) throw CatError("associator is not invertible");
  return *inv;
}

std::string at_pair(int t, int s) {
  std::ostringstream os;
  os << "(t,s)=(" << t << "," << s << ")";
  return os.str();
}

}  // namespace

// --- independent element-level oracle ---------------------------------------

Report oracle_exhibits_left(const Profunctor& n, const Profunctor& m, const Profunctor& l,
                            const BlockTable& u_blocks) {
  Report rep;
  for (const BaseObject& o : n.components)
    if (o.tag != BaseTag::finset) throw CatError("oracle supports the finset base only");
  if (m.target != n.source || l.source != m.source || l.target != n.target)
    throw CatError("oracle endpoints do not match");
  const int nb = n.nt(), na = n.ns(), nx = m.ns();
  if (int(u_blocks.size()) != nb * na * nx) throw CatError("oracle block table has wrong length");

  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < nx; ++x) {
      // Slot layout: one table per b, concatenated in ascending b.
      std::vector<int> off(nb + 1, 0), sz(nb), out(nb);
      long total = 1;
      for (int b = 0; b < nb; ++b) {
        sz[b] = n.at(b, a).n;
        out[b] = l.at(b, x).n;
        off[b + 1] = off[b] + sz[b];
        for (int v = 0; v < sz[b]; ++v) {
          total *= out[b];
          if (total > 5'000'000) throw CatError("oracle component too large to enumerate");
        }
        if (out[b] == 0 && sz[b] > 0) total = 0;
      }
      const int slots = off[nb];

      // All action-compatible families of plain tables.
      std::set<std::vector<int>> natural;
      std::vector<int> fam(slots, 0);
      bool more = total > 0;
      while (more) {
        bool ok = true;
        for (int b2 = 0; b2 < nb && ok; ++b2) {
          for (int b = 0; b < nb && ok; ++b) {
            const int hn = n.target.hom_ob(b2, b).n;
            const std::vector<int>& act_n = n.lact(b2, b, a).table;
            const std::vector<int>& act_l = l.lact(b2, b, x).table;
            for (int beta = 0; beta < hn && ok; ++beta)
              for (int v = 0; v < sz[b] && ok; ++v) {
                const int lhs = fam[off[b2] + act_n[size_t(beta) * sz[b] + v]];
                const int rhs = act_l[size_t(beta) * out[b] + fam[off[b] + v]];
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

      // Comparison map w |-> (v |-> u(v (x) w)) and its bijectivity.
      const int mw = m.at(a, x).n;
      std::set<std::vector<int>> image;
      bool injective = true, contained = true;
      for (int w = 0; w < mw; ++w) {
        std::vector<int> f(slots, 0);
        for (int b = 0; b < nb; ++b) {
          const std::vector<int>& blk = u_blocks[(size_t(b) * na + a) * nx + x];
          if (int(blk.size()) != sz[b] * mw) throw CatError("oracle block has wrong length");
          for (int v = 0; v < sz[b]; ++v) {
            const int val = blk[size_t(v) * mw + w];
            if (val < 0 || val >= out[b]) throw CatError("oracle block value out of range");
            f[off[b] + v] = val;
          }
        }
        if (!natural.count(f)) contained = false;
        if (!image.insert(f).second) injective = false;
      }
      if (!contained)
        rep.violations.push_back("comparison image not action-compatible at " + at_pair(a, x));
      if (!injective)
        rep.violations.push_back("comparison map not injective at " + at_pair(a, x));
      if (contained && injective && image.size() != natural.size()) {
        std::ostringstream os;
        os << "comparison map not surjective at " << at_pair(a, x) << ": hits " << image.size()
           << " of " << natural.size() << " families";
        rep.violations.push_back(os.str());
      }
    }
  }
  return rep;
}

// --- collective tensor -------------------------------------------------------

TensorPresentation tensor_over(const Profunctor& n, const Profunctor& m) {
  if (m.target != n.source) throw CatError("tensor_over needs m.target == n.source");
  const VCategory& mid = n.source;
  const int nmid = mid.size();
  TensorPresentation pres;
  pres.n = n;
  pres.m = m;
  pres.result.source = m.source;
  pres.result.target = n.target;
  const int nt = n.nt(), ns = m.ns();
  const BaseTag tag = mid.tag;

  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      TensorComponent tc;
      std::vector<BaseObject> parts, relparts;
      for (int b = 0; b < nmid; ++b) parts.push_back(tensor_obj(n.at(t, b), m.at(b, s)));
      for (int b = 0; b < nmid; ++b)
        for (int b2 = 0; b2 < nmid; ++b2)
          relparts.push_back(
              tensor_obj(tensor_obj(n.at(t, b), mid.hom_ob(b, b2)), m.at(b2, s)));
      tc.sum = coproduct(tag, parts);
      tc.relsum = coproduct(tag, relparts);

      std::vector<BaseMorphism> via_n_blocks, via_m_blocks;
      for (int b = 0; b < nmid; ++b) {
        for (int b2 = 0; b2 < nmid; ++b2) {
          via_n_blocks.push_back(seq(tensor_mor(n.ract(t, b, b2), identity(m.at(b2, s))),
                                     tc.sum.injections[b2]));
          via_m_blocks.push_back(
              seq(associator(n.at(t, b), mid.hom_ob(b, b2), m.at(b2, s)),
                  tensor_mor(identity(n.at(t, b)), m.lact(b, b2, s)), tc.sum.injections[b]));
        }
      }
      tc.via_n = from_coproduct(tc.relsum, via_n_blocks, tc.sum.obj);
      tc.via_m = from_coproduct(tc.relsum, via_m_blocks, tc.sum.obj);
      QuotientResult q = coequalizer(tc.via_n, tc.via_m);
      tc.proj = q.projection;
      pres.result.components.push_back(q.obj);
      pres.comps.push_back(std::move(tc));
    }
  }

  // Inherited actions, induced through the tensored epimorphisms.
  const VCategory& tgt = n.target;
  const VCategory& src = m.source;
  for (int t2 = 0; t2 < nt; ++t2) {
    for (int t = 0; t < nt; ++t) {
      for (int s = 0; s < ns; ++s) {
        const BaseObject& h = tgt.hom_ob(t2, t);
        const TensorComponent& c0 = pres.at(t, s);
        const TensorComponent& c2 = pres.at(t2, s);
        std::vector<BaseObject> parts;
        for (int b = 0; b < nmid; ++b) parts.push_back(tensor_obj(n.at(t, b), m.at(b, s)));
        std::vector<BaseMorphism> blocks;
        for (int b = 0; b < nmid; ++b)
          blocks.push_back(seq(associator_inv(h, n.at(t, b), m.at(b, s)),
                               tensor_mor(n.lact(t2, t, b), identity(m.at(b, s))),
                               c2.sum.injections[b], c2.proj));
        CoproductResult dist;
        std::vector<BaseObject> tparts;
        for (const BaseObject& p : parts) tparts.push_back(tensor_obj(h, p));
        dist = coproduct(tgt.tag, tparts);
        BaseMorphism hmor = seq(distribute_sum_right(h, parts),
                                from_coproduct(dist, blocks, pres.result.at(t2, s)));
        BaseMorphism e = tensor_mor(identity(h), c0.proj);
        pres.result.left_action.push_back(induce_from_coequalizer(e, hmor));
      }
    }
  }
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      for (int s2 = 0; s2 < ns; ++s2) {
        const BaseObject& h = src.hom_ob(s, s2);
        const TensorComponent& c0 = pres.at(t, s);
        const TensorComponent& c2 = pres.at(t, s2);
        std::vector<BaseObject> parts;
        for (int b = 0; b < nmid; ++b) parts.push_back(tensor_obj(n.at(t, b), m.at(b, s)));
        std::vector<BaseMorphism> blocks;
        for (int b = 0; b < nmid; ++b)
          blocks.push_back(seq(associator(n.at(t, b), m.at(b, s), h),
                               tensor_mor(identity(n.at(t, b)), m.ract(b, s, s2)),
                               c2.sum.injections[b], c2.proj));
        std::vector<BaseObject> tparts;
        for (const BaseObject& p : parts) tparts.push_back(tensor_obj(p, h));
        CoproductResult dist = coproduct(src.tag, tparts);
        BaseMorphism hmor = seq(distribute_sum_left(parts, h),
                                from_coproduct(dist, blocks, pres.result.at(t, s2)));
        BaseMorphism e = tensor_mor(c0.proj, identity(h));
        pres.result.right_action.push_back(induce_from_coequalizer(e, hmor));
      }
    }
  }
  return pres;
}

ProfMap induce_out_of_tensor(const TensorPresentation& pres,
                             const std::vector<BaseMorphism>& family, const Profunctor& l) {
  const int nt = pres.result.nt(), ns = pres.result.ns();
  const int nmid = pres.n.ns();
  if (int(family.size()) != nt * nmid * ns)
    throw CatError("induce_out_of_tensor: family has wrong length");
  ProfMap out;
  out.dom = pres.result;
  out.cod = l;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      const TensorComponent& tc = pres.at(t, s);
      std::vector<BaseMorphism> blocks;
      for (int b = 0; b < nmid; ++b) blocks.push_back(family[(size_t(t) * nmid + b) * ns + s]);
      BaseMorphism big = from_coproduct(tc.sum, blocks, l.at(t, s));
      BaseMorphism r1 = seq(tc.via_n, big), r2 = seq(tc.via_m, big);
      if (r1 != r2) {
        for (int b = 0; b < nmid; ++b)
          for (int b2 = 0; b2 < nmid; ++b2) {
            const BaseMorphism& inj = tc.relsum.injections[size_t(b) * nmid + b2];
            if (seq(inj, r1) != seq(inj, r2)) {
              std::ostringstream os;
              os << "family not balanced over middle pair (" << b << "," << b2
                 << ") at " << at_pair(t, s);
              throw CatError(os.str());
            }
          }
        throw CatError("family not balanced at " + at_pair(t, s));
      }
      out.components.push_back(induce_from_coequalizer(tc.proj, big));
    }
  }
  return out;
}

ProfMap tensor_profmap(const TensorPresentation& dom_pres, const TensorPresentation& cod_pres,
                       const ProfMap& beta, const ProfMap& alpha) {
  if (beta.dom != dom_pres.n || beta.cod != cod_pres.n || alpha.dom != dom_pres.m ||
      alpha.cod != cod_pres.m)
    throw CatError("tensor_profmap: factor maps do not match the presentations");
  const int nt = dom_pres.result.nt(), ns = dom_pres.result.ns();
  const int nmid = dom_pres.n.ns();
  ProfMap out;
  out.dom = dom_pres.result;
  out.cod = cod_pres.result;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      const TensorComponent& d = dom_pres.at(t, s);
      const TensorComponent& c = cod_pres.at(t, s);
      std::vector<BaseMorphism> blocks;
      for (int b = 0; b < nmid; ++b)
        blocks.push_back(
            seq(tensor_mor(beta.at(t, b), alpha.at(b, s)), c.sum.injections[b], c.proj));
      BaseMorphism h = from_coproduct(d.sum, blocks, cod_pres.result.at(t, s));
      out.components.push_back(induce_from_coequalizer(d.proj, h));
    }
  }
  return out;
}

UnitorPair module_left_unitor(const Profunctor& m) {
  UnitorPair up;
  Profunctor idt = identity_profunctor(m.target);
  up.pres = tensor_over(idt, m);
  const int nt = m.nt(), ns = m.ns();
  std::vector<BaseMorphism> family;
  for (int t = 0; t < nt; ++t)
    for (int b = 0; b < nt; ++b)
      for (int s = 0; s < ns; ++s) family.push_back(m.lact(t, b, s));
  up.fwd = induce_out_of_tensor(up.pres, family, m);
  up.inv.dom = m;
  up.inv.cod = up.pres.result;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      auto lu_inv = is_iso(left_unitor(m.at(t, s)));
      if (!lu_inv) throw CatError("left unitor is not invertible");
      const TensorComponent& tc = up.pres.at(t, s);
      up.inv.components.push_back(seq(*lu_inv,
                                      tensor_mor(m.target.unit[size_t(t)], identity(m.at(t, s))),
                                      tc.sum.injections[t], tc.proj));
    }
  }
  return up;
}

UnitorPair module_right_unitor(const Profunctor& m) {
  UnitorPair up;
  Profunctor ids = identity_profunctor(m.source);
  up.pres = tensor_over(m, ids);
  const int nt = m.nt(), ns = m.ns();
  std::vector<BaseMorphism> family;
  for (int t = 0; t < nt; ++t)
    for (int b = 0; b < ns; ++b)
      for (int s = 0; s < ns; ++s) family.push_back(m.ract(t, b, s));
  up.fwd = induce_out_of_tensor(up.pres, family, m);
  up.inv.dom = m;
  up.inv.cod = up.pres.result;
  for (int t = 0; t < nt; ++t) {
    for (int s = 0; s < ns; ++s) {
      auto ru_inv = is_iso(right_unitor(m.at(t, s)));
      if (!ru_inv) throw CatError("right unitor is not invertible");
      const TensorComponent& tc = up.pres.at(t, s);
      up.inv.components.push_back(seq(*ru_inv,
                                      tensor_mor(identity(m.at(t, s)), m.source.unit[size_t(s)]),
                                      tc.sum.injections[s], tc.proj));
    }
  }
  return up;
}

ProfMap module_associator(const Profunctor& p, const Profunctor& n, const Profunctor& m) {
  if (n.target != p.source || m.target != n.source)
    throw CatError("module_associator: endpoints do not compose");
  TensorPresentation pn = tensor_over(p, n);
  TensorPresentation nm = tensor_over(n, m);
  TensorPresentation lhs = tensor_over(pn.result, m);
  TensorPresentation rhs = tensor_over(p, nm.result);
  const int nd = p.nt(), na = m.ns();
  const int nb = n.source.size();  // middle shared with m
  const int nc = p.source.size();  // middle shared with n
  const BaseTag tag = p.source.tag;

  ProfMap out;
  out.dom = lhs.result;
  out.cod = rhs.result;
  for (int d = 0; d < nd; ++d) {
    for (int a = 0; a < na; ++a) {
      std::vector<BaseObject> bigparts;
      for (int b = 0; b < nb; ++b)
        bigparts.push_back(tensor_obj(pn.at(d, b).sum.obj, m.at(b, a)));
      CoproductResult big = coproduct(tag, bigparts);

      std::vector<BaseMorphism> eblocks, hblocks;
      for (int b = 0; b < nb; ++b) {
        const TensorComponent& lc = lhs.at(d, a);
        eblocks.push_back(seq(tensor_mor(pn.at(d, b).proj, identity(m.at(b, a))),
                              lc.sum.injections[b], lc.proj));

        std::vector<BaseObject> pnparts;
        for (int c = 0; c < nc; ++c)
          pnparts.push_back(tensor_obj(p.at(d, c), n.at(c, b)));
        std::vector<BaseObject> tparts;
        for (const BaseObject& q : pnparts) tparts.push_back(tensor_obj(q, m.at(b, a)));
        CoproductResult dist = coproduct(tag, tparts);
        std::vector<BaseMorphism> inner;
        for (int c = 0; c < nc; ++c) {
          const TensorComponent& nmc = nm.at(c, a);
          const TensorComponent& rc = rhs.at(d, a);
          inner.push_back(seq(associator(p.at(d, c), n.at(c, b), m.at(b, a)),
                              tensor_mor(identity(p.at(d, c)),
                                         seq(nmc.sum.injections[b], nmc.proj)),
                              rc.sum.injections[c], rc.proj));
        }
        hblocks.push_back(seq(distribute_sum_left(pnparts, m.at(b, a)),
                              from_coproduct(dist, inner, rhs.result.at(d, a))));
      }
      BaseMorphism e = from_coproduct(big, eblocks, lhs.result.at(d, a));
      BaseMorphism h = from_coproduct(big, hblocks, rhs.result.at(d, a));
      out.components.push_back(induce_from_coequalizer(e, h));
    }
  }
  return out;
}

ProfMap compose_profmap(const ProfMap& f, const ProfMap& g) {
  if (f.cod != g.dom) throw CatError("compose_profmap: endpoints do not match");
  ProfMap out;
  out.dom = f.dom;
  out.cod = g.cod;
  for (size_t i = 0; i < f.components.size(); ++i)
    out.components.push_back(seq(f.components[i], g.components[i]));
  return out;
}

ProfMap inverse_profmap(const ProfMap& f) {
  ProfMap out;
  out.dom = f.cod;
  out.cod = f.dom;
  for (const BaseMorphism& c : f.components) {
    auto inv = is_iso(c);
    if (!inv) throw CatError("inverse_profmap: component is not invertible");
    out.components.push_back(*inv);
  }
  return out;
}

// --- lifting homs ------------------------------------------------------------

EndPresentation lifting_hom_left(const Profunctor& n, const Profunctor& l) {
  if (l.target != n.target) throw CatError("lifting_hom_left needs a shared target");
  EndPresentation end;
  end.n = n;
  end.l = l;
  end.result.source = l.source;
  end.result.target = n.source;
  const int nb = n.nt(), na = n.ns(), nx = l.ns();
  const VCategory& bcat = n.target;
  const BaseTag tag = bcat.tag;

  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < nx; ++x) {
      EndComponent ec;
      std::vector<BaseObject> parts;
      for (int b = 0; b < nb; ++b) parts.push_back(hom_left(n.at(b, a), l.at(b, x)));
      ec.prod = product(tag, parts);
      std::vector<BaseObject> parts2;
      for (int b = 0; b < nb; ++b)
        for (int b2 = 0; b2 < nb; ++b2)
          parts2.push_back(
              hom_left(tensor_obj(bcat.hom_ob(b2, b), n.at(b, a)), l.at(b2, x)));
      ProductResult prod2 = product(tag, parts2);

      std::vector<BaseMorphism> r1b, r2b;
      for (int b = 0; b < nb; ++b) {
        for (int b2 = 0; b2 < nb; ++b2) {
          r1b.push_back(seq(ec.prod.projections[b2],
                            hom_left_pre(n.lact(b2, b, a), l.at(b2, x))));
          const BaseObject tens = tensor_obj(bcat.hom_ob(b2, b), n.at(b, a));
          BaseMorphism f = seq(associator(bcat.hom_ob(b2, b), n.at(b, a), parts[b]),
                               tensor_mor(identity(bcat.hom_ob(b2, b)),
                                          ev_left(n.at(b, a), l.at(b, x))),
                               l.lact(b2, b, x));
          r2b.push_back(seq(ec.prod.projections[b], curry_left(tens, parts[b], f)));
        }
      }
      BaseMorphism r1 = to_product(prod2, r1b, ec.prod.obj);
      BaseMorphism r2 = to_product(prod2, r2b, ec.prod.obj);
      SubobjectResult eq = equalizer(r1, r2);
      ec.inclusion = eq.inclusion;
      end.result.components.push_back(eq.obj);
      end.comps.push_back(std::move(ec));
    }
  }

  const VCategory& acat = n.source;
  const VCategory& xcat = l.source;
  for (int a2 = 0; a2 < na; ++a2) {
    for (int a = 0; a < na; ++a) {
      for (int x = 0; x < nx; ++x) {
        const BaseObject& h = acat.hom_ob(a2, a);
        const EndComponent& e0 = end.at(a, x);
        const EndComponent& e2 = end.at(a2, x);
        const BaseObject dom = tensor_obj(h, end.result.at(a, x));
        std::vector<BaseMorphism> blocks;
        for (int b = 0; b < nb; ++b) {
          BaseMorphism pick = seq(e0.inclusion, e0.prod.projections[b]);
          BaseMorphism g = seq(associator_inv(n.at(b, a2), h, end.result.at(a, x)),
                               tensor_mor(n.ract(b, a2, a), pick),
                               ev_left(n.at(b, a), l.at(b, x)));
          blocks.push_back(curry_left(n.at(b, a2), dom, g));
        }
        BaseMorphism into = to_product(e2.prod, blocks, dom);
        end.result.left_action.push_back(restrict_through_equalizer(e2.inclusion, into));
      }
    }
  }
  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < nx; ++x) {
      for (int x2 = 0; x2 < nx; ++x2) {
        const BaseObject& h = xcat.hom_ob(x, x2);
        const EndComponent& e0 = end.at(a, x);
        const EndComponent& e2 = end.at(a, x2);
        const BaseObject dom = tensor_obj(end.result.at(a, x), h);
        std::vector<BaseMorphism> blocks;
        for (int b = 0; b < nb; ++b) {
          BaseMorphism pick = seq(e0.inclusion, e0.prod.projections[b]);
          BaseMorphism evb = seq(tensor_mor(identity(n.at(b, a)), pick),
                                 ev_left(n.at(b, a), l.at(b, x)));
          BaseMorphism g = seq(associator_inv(n.at(b, a), end.result.at(a, x), h),
                               tensor_mor(evb, identity(h)), l.ract(b, x, x2));
          blocks.push_back(curry_left(n.at(b, a), dom, g));
        }
        BaseMorphism into = to_product(e2.prod, blocks, dom);
        end.result.right_action.push_back(restrict_through_equalizer(e2.inclusion, into));
      }
    }
  }
  return end;
}

EndPresentation lifting_hom_right(const Profunctor& m, const Profunctor& l) {
  if (l.source != m.source) throw CatError("lifting_hom_right needs a shared source");
  EndPresentation end;
  end.n = m;
  end.l = l;
  end.result.source = m.target;
  end.result.target = l.target;
  const int na = m.ns(), nb = m.nt(), ny = l.nt();
  const VCategory& acat = m.source;
  const BaseTag tag = acat.tag;

  for (int y = 0; y < ny; ++y) {
    for (int b = 0; b < nb; ++b) {
      EndComponent ec;
      std::vector<BaseObject> parts;
      for (int a = 0; a < na; ++a) parts.push_back(hom_right(m.at(b, a), l.at(y, a)));
      ec.prod = product(tag, parts);
      std::vector<BaseObject> parts2;
      for (int a = 0; a < na; ++a)
        for (int a2 = 0; a2 < na; ++a2)
          parts2.push_back(
              hom_right(tensor_obj(m.at(b, a), acat.hom_ob(a, a2)), l.at(y, a2)));
      ProductResult prod2 = product(tag, parts2);

      std::vector<BaseMorphism> r1b, r2b;
      for (int a = 0; a < na; ++a) {
        for (int a2 = 0; a2 < na; ++a2) {
          r1b.push_back(seq(ec.prod.projections[a2],
                            hom_right_pre(m.ract(b, a, a2), l.at(y, a2))));
          const BaseObject tens = tensor_obj(m.at(b, a), acat.hom_ob(a, a2));
          BaseMorphism f = seq(associator_inv(parts[a], m.at(b, a), acat.hom_ob(a, a2)),
                               tensor_mor(ev_right(m.at(b, a), l.at(y, a)),
                                          identity(acat.hom_ob(a, a2))),
                               l.ract(y, a, a2));
          r2b.push_back(seq(ec.prod.projections[a], curry_right(parts[a], tens, f)));
        }
      }
      BaseMorphism r1 = to_product(prod2, r1b, ec.prod.obj);
      BaseMorphism r2 = to_product(prod2, r2b, ec.prod.obj);
      SubobjectResult eq = equalizer(r1, r2);
      ec.inclusion = eq.inclusion;
      end.result.components.push_back(eq.obj);
      end.comps.push_back(std::move(ec));
    }
  }

  const VCategory& ycat = l.target;
  const VCategory& bcat = m.target;
  for (int y2 = 0; y2 < ny; ++y2) {
    for (int y = 0; y < ny; ++y) {
      for (int b = 0; b < nb; ++b) {
        const BaseObject& h = ycat.hom_ob(y2, y);
        const EndComponent& e0 = end.at(y, b);
        const EndComponent& e2 = end.at(y2, b);
        const BaseObject dom = tensor_obj(h, end.result.at(y, b));
        std::vector<BaseMorphism> blocks;
        for (int a = 0; a < na; ++a) {
          BaseMorphism pick = seq(e0.inclusion, e0.prod.projections[a]);
          BaseMorphism evb = seq(tensor_mor(pick, identity(m.at(b, a))),
                                 ev_right(m.at(b, a), l.at(y, a)));
          BaseMorphism g = seq(associator(h, end.result.at(y, b), m.at(b, a)),
                               tensor_mor(identity(h), evb), l.lact(y2, y, a));
          blocks.push_back(curry_right(dom, m.at(b, a), g));
        }
        BaseMorphism into = to_product(e2.prod, blocks, dom);
        end.result.left_action.push_back(restrict_through_equalizer(e2.inclusion, into));
      }
    }
  }
  for (int y = 0; y < ny; ++y) {
    for (int b = 0; b < nb; ++b) {
      for (int b2 = 0; b2 < nb; ++b2) {
        const BaseObject& h = bcat.hom_ob(b, b2);
        const EndComponent& e0 = end.at(y, b);
        const EndComponent& e2 = end.at(y, b2);
        const BaseObject dom = tensor_obj(end.result.at(y, b), h);
        std::vector<BaseMorphism> blocks;
        for (int a = 0; a < na; ++a) {
          BaseMorphism pick = seq(e0.inclusion, e0.prod.projections[a]);
          BaseMorphism g = seq(associator(end.result.at(y, b), h, m.at(b2, a)),
                               tensor_mor(identity(end.result.at(y, b)), m.lact(b, b2, a)),
                               tensor_mor(pick, identity(m.at(b, a))),
                               ev_right(m.at(b, a), l.at(y, a)));
          blocks.push_back(curry_right(dom, m.at(b2, a), g));
        }
        BaseMorphism into = to_product(e2.prod, blocks, dom);
        end.result.right_action.push_back(restrict_through_equalizer(e2.inclusion, into));
      }
    }
  }
  return end;
}

ProfMap transpose_left(const TensorPresentation& pres, const EndPresentation& end,
                       const ProfMap& u) {
  if (u.dom != pres.result) throw CatError("transpose_left: map does not leave the tensor");
  const Profunctor& n = pres.n;
  const Profunctor& m = pres.m;
  const int na = n.ns(), nb = n.nt(), nx = m.ns();
  ProfMap out;
  out.dom = m;
  out.cod = end.result;
  for (int a = 0; a < na; ++a) {
    for (int x = 0; x < nx; ++x) {
      const EndComponent& ec = end.at(a, x);
      std::vector<BaseMorphism> blocks;
      for (int b = 0; b < nb; ++b) {
        const TensorComponent& tc = pres.at(b, x);
        BaseMorphism f = seq(tc.sum.injections[a], tc.proj, u.at(b, x));
        blocks.push_back(curry_left(n.at(b, a), m.at(a, x), f));
      }
      BaseMorphism into = to_product(ec.prod, blocks, m.at(a, x));
      out.components.push_back(restrict_through_equalizer(ec.inclusion, into));
    }
  }
  return out;
}

ProfMap transpose_right(const TensorPresentation& pres, const EndPresentation& end,
                        const ProfMap& u) {
  if (u.dom != pres.result) throw CatError("transpose_right: map does not leave the tensor");
  const Profunctor& n = pres.n;
  const Profunctor& m = pres.m;
  const int nb = n.ns(), nc = n.nt(), na = m.ns();
  ProfMap out;
  out.dom = n;
  out.cod = end.result;
  for (int t = 0; t < nc; ++t) {
    for (int b = 0; b < nb; ++b) {
      const EndComponent& ec = end.at(t, b);
      std::vector<BaseMorphism> blocks;
      for (int a = 0; a < na; ++a) {
        const TensorComponent& tc = pres.at(t, a);
        BaseMorphism f = seq(tc.sum.injections[b], tc.proj, u.at(t, a));
        blocks.push_back(curry_right(n.at(t, b), m.at(b, a), f));
      }
      BaseMorphism into = to_product(ec.prod, blocks, n.at(t, b));
      out.components.push_back(restrict_through_equalizer(ec.inclusion, into));
    }
  }
  return out;
}

ProfMap end_evaluation_left(const EndPresentation& end, const TensorPresentation& pres) {
  if (pres.n != end.n || pres.m != end.result)
    throw CatError("end_evaluation_left: presentation does not tensor against the end");
  const Profunctor& n = end.n;
  const Profunctor& l = end.l;
  const int nb = n.nt(), na = n.ns(), nx = l.ns();
  std::vector<BaseMorphism> family;
  for (int b = 0; b < nb; ++b)
    for (int a = 0; a < na; ++a)
      for (int x = 0; x < nx; ++x) {
        const EndComponent& ec = end.at(a, x);
        BaseMorphism pick = seq(ec.inclusion, ec.prod.projections[b]);
        family.push_back(seq(tensor_mor(identity(n.at(b, a)), pick),
                             ev_left(n.at(b, a), l.at(b, x))));
      }
  return induce_out_of_tensor(pres, family, l);
}

Exhibition exhibits_as_left_hom(const TensorPresentation& pres, const ProfMap& u) {
  Exhibition ex;
  EndPresentation end = lifting_hom_left(pres.n, u.cod);
  ex.kappa = transpose_left(pres, end, u);
  ex.kappa_inv.dom = end.result;
  ex.kappa_inv.cod = pres.m;
  for (int t = 0; t < pres.m.nt(); ++t) {
    for (int s = 0; s < pres.m.ns(); ++s) {
      auto inv = is_iso(ex.kappa.at(t, s));
      if (inv) {
        ex.kappa_inv.components.push_back(*inv);
      } else {
        ex.kappa_inv.components.push_back(BaseMorphism{});
        ex.detail.violations.push_back("comparison map not invertible at " + at_pair(t, s));
      }
    }
  }
  ex.exhibits = ex.detail.ok();
  return ex;
}

Exhibition exhibits_as_right_hom(const TensorPresentation& pres, const ProfMap& u) {
  Exhibition ex;
  EndPresentation end = lifting_hom_right(pres.m, u.cod);
  ex.kappa = transpose_right(pres, end, u);
  ex.kappa_inv.dom = end.result;
  ex.kappa_inv.cod = pres.n;
  for (int t = 0; t < pres.n.nt(); ++t) {
    for (int s = 0; s < pres.n.ns(); ++s) {
      auto inv = is_iso(ex.kappa.at(t, s));
      if (inv) {
        ex.kappa_inv.components.push_back(*inv);
      } else {
        ex.kappa_inv.components.push_back(BaseMorphism{});
        ex.detail.violations.push_back("comparison map not invertible at " + at_pair(t, s));
      }
    }
  }
  ex.exhibits = ex.detail.ok();
  return ex;
}

// --- adjunction --------------------------------------------------------------

Report check_adjunction(const Adjunction& adj) {
  Report rep;
  const Profunctor& phi = adj.weight;
  const Profunctor& psi = adj.coweight;
  if (phi.source != psi.target || phi.target != psi.source) {
    rep.violations.push_back("weight and coweight endpoints do not match");
    return rep;
  }
  Profunctor ida = identity_profunctor(phi.source);
  Profunctor idb = identity_profunctor(phi.target);
  TensorPresentation psiphi = tensor_over(psi, phi);
  TensorPresentation phipsi = tensor_over(phi, psi);
  if (adj.unit_map.dom != ida || adj.unit_map.cod != psiphi.result) {
    rep.violations.push_back("unit map has unexpected endpoints");
    return rep;
  }
  if (adj.counit_map.dom != phipsi.result || adj.counit_map.cod != idb) {
    rep.violations.push_back("counit map has unexpected endpoints");
    return rep;
  }
  Report pu = check_profmap(adj.unit_map);
  for (const std::string& v : pu.violations) rep.violations.push_back("unit map: " + v);
  Report pc = check_profmap(adj.counit_map);
  for (const std::string& v : pc.violations) rep.violations.push_back("counit map: " + v);
  if (!rep.ok()) return rep;

  // weight triangle
  {
    UnitorPair ru = module_right_unitor(phi);
    UnitorPair lu = module_left_unitor(phi);
    TensorPresentation phi_psiphi = tensor_over(phi, psiphi.result);
    TensorPresentation phipsi_phi = tensor_over(phipsi.result, phi);
    ProfMap step1 = tensor_profmap(ru.pres, phi_psiphi, identity_profmap(phi), adj.unit_map);
    ProfMap assoc_inv = inverse_profmap(module_associator(phi, psi, phi));
    ProfMap step2 = tensor_profmap(phipsi_phi, lu.pres, adj.counit_map, identity_profmap(phi));
    ProfMap total = compose_profmap(
        compose_profmap(compose_profmap(compose_profmap(ru.inv, step1), assoc_inv), step2),
        lu.fwd);
    ProfMap want = identity_profmap(phi);
    for (int t = 0; t < phi.nt(); ++t)
      for (int s = 0; s < phi.ns(); ++s)
        if (total.at(t, s) != want.at(t, s))
          rep.violations.push_back("triangle on the weight fails at " + at_pair(t, s));
  }

  // coweight triangle
  {
    UnitorPair lu = module_left_unitor(psi);
    UnitorPair ru = module_right_unitor(psi);
    TensorPresentation psiphi_psi = tensor_over(psiphi.result, psi);
    TensorPresentation psi_phipsi = tensor_over(psi, phipsi.result);
    ProfMap step1 = tensor_profmap(lu.pres, psiphi_psi, adj.unit_map, identity_profmap(psi));
    ProfMap assoc = module_associator(psi, phi, psi);
    ProfMap step2 = tensor_profmap(psi_phipsi, ru.pres, identity_profmap(psi), adj.counit_map);
    ProfMap total = compose_profmap(
        compose_profmap(compose_profmap(compose_profmap(lu.inv, step1), assoc), step2),
        ru.fwd);
    ProfMap want = identity_profmap(psi);
    for (int t = 0; t < psi.nt(); ++t)
      for (int s = 0; s < psi.ns(); ++s)
        if (total.at(t, s) != want.at(t, s))
          rep.violations.push_back("triangle on the coweight fails at " + at_pair(t, s));
  }
  return rep;
}

}  // namespace absolim
