#include "absolim/enriched.hpp"

namespace absolim {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

Report check_category(const VCategory& c) {
  Report rep;
  const int n = c.size();
  auto I = unit_obj(c.tag);
  bool shapes_ok = true;
  auto shape = [&](bool cond, const std::string& msg) {
    if (!cond) {
      rep.violations.push_back(msg);
      shapes_ok = false;
    }
  };

  shape(c.hom.size() == size_t(n) * n, "hom table has wrong arity");
  shape(c.unit.size() == size_t(n), "unit table has wrong arity");
  shape(c.comp.size() == size_t(n) * n * n, "composition table has wrong arity");
  if (!shapes_ok) return rep;

  for (const auto& o : c.objects) shape(o.tag == c.tag, "object from wrong base");
  for (const auto& h : c.hom) shape(h.tag == c.tag, "hom object from wrong base");
  for (int a = 0; a < n; ++a)
    shape(c.unit[size_t(a)].dom == I && c.unit[size_t(a)].cod == c.hom_ob(a, a),
          "unit " + std::to_string(a) + " has wrong endpoints");
  for (int x = 0; x < n && shapes_ok; ++x)
    for (int b = 0; b < n && shapes_ok; ++b)
      for (int a = 0; a < n && shapes_ok; ++a)
        shape(c.mu(x, b, a).dom == tensor_obj(c.hom_ob(x, b), c.hom_ob(b, a)) &&
                  c.mu(x, b, a).cod == c.hom_ob(x, a),
              "composition " + triple_str(x, b, a) + " has wrong endpoints");
  if (!shapes_ok) return rep;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto lhs = seq(tensor_mor(c.unit[size_t(a)], identity(c.hom_ob(a, b))), c.mu(a, a, b));
      if (lhs != left_unitor(c.hom_ob(a, b)))
        rep.violations.push_back("left identity fails at (a,b)=" + pair_str(a, b));
      auto rhs = seq(tensor_mor(identity(c.hom_ob(a, b)), c.unit[size_t(b)]), c.mu(a, b, b));
      if (rhs != right_unitor(c.hom_ob(a, b)))
        rep.violations.push_back("right identity fails at (a,b)=" + pair_str(a, b));
    }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x)
        for (int d = 0; d < n; ++d) {
          auto route1 = seq(tensor_mor(c.mu(a, b, x), identity(c.hom_ob(x, d))), c.mu(a, x, d));
          auto route2 = seq(associator(c.hom_ob(a, b), c.hom_ob(b, x), c.hom_ob(x, d)),
                            tensor_mor(identity(c.hom_ob(a, b)), c.mu(b, x, d)), c.mu(a, b, d));
          if (route1 != route2)
            rep.violations.push_back("associativity fails at (a,b,c,d)=(" + std::to_string(a) +
                                     "," + std::to_string(b) + "," + std::to_string(x) + "," +
                                     std::to_string(d) + ")");
        }
  return rep;
}

Report check_functor(const VFunctor& f) {
  Report rep;
  const int n = f.dom.size();
  bool shapes_ok = true;
  auto shape = [&](bool cond, const std::string& msg) {
    if (!cond) {
      rep.violations.push_back(msg);
      shapes_ok = false;
    }
  };

  shape(f.dom.tag == f.cod.tag, "functor endpoints from different bases");
  shape(f.object_map.size() == size_t(n), "object map has wrong arity");
  shape(f.action.size() == size_t(n) * n, "action table has wrong arity");
  if (!shapes_ok) return rep;
  for (int a = 0; a < n; ++a)
    shape(f.ob(a) >= 0 && f.ob(a) < f.cod.size(),
          "object map out of range at " + std::to_string(a));
  if (!shapes_ok) return rep;
  for (int b = 0; b < n && shapes_ok; ++b)
    for (int a = 0; a < n && shapes_ok; ++a)
      shape(f.act(b, a).dom == f.dom.hom_ob(b, a) &&
                f.act(b, a).cod == f.cod.hom_ob(f.ob(b), f.ob(a)),
            "action " + pair_str(b, a) + " has wrong endpoints");
  if (!shapes_ok) return rep;

  for (int a = 0; a < n; ++a)
    if (seq(f.dom.unit[size_t(a)], f.act(a, a)) != f.cod.unit[size_t(f.ob(a))])
      rep.violations.push_back("unit preservation fails at " + std::to_string(a));

  for (int x = 0; x < n; ++x)
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a) {
        auto lhs = seq(f.dom.mu(x, b, a), f.act(x, a));
        auto rhs = seq(tensor_mor(f.act(x, b), f.act(b, a)), f.cod.mu(f.ob(x), f.ob(b), f.ob(a)));
        if (lhs != rhs)
          rep.violations.push_back("composition preservation fails at " + triple_str(x, b, a));
      }
  return rep;
}

Report check_profunctor(const Profunctor& m) {
  Report rep;
  const int ns = m.ns(), nt = m.nt();
  bool shapes_ok = true;
  auto shape = [&](bool cond, const std::string& msg) {
    if (!cond) {
      rep.violations.push_back(msg);
      shapes_ok = false;
    }
  };

  shape(m.source.tag == m.target.tag, "profunctor endpoints from different bases");
  shape(m.components.size() == size_t(nt) * ns, "component table has wrong arity");
  shape(m.left_action.size() == size_t(nt) * nt * ns, "left action table has wrong arity");
  shape(m.right_action.size() == size_t(nt) * ns * ns, "right action table has wrong arity");
  if (!shapes_ok) return rep;

  for (int t2 = 0; t2 < nt && shapes_ok; ++t2)
    for (int t = 0; t < nt && shapes_ok; ++t)
      for (int s = 0; s < ns && shapes_ok; ++s)
        shape(m.lact(t2, t, s).dom == tensor_obj(m.target.hom_ob(t2, t), m.at(t, s)) &&
                  m.lact(t2, t, s).cod == m.at(t2, s),
              "left action " + triple_str(t2, t, s) + " has wrong endpoints");
  for (int t = 0; t < nt && shapes_ok; ++t)
    for (int s = 0; s < ns && shapes_ok; ++s)
      for (int s2 = 0; s2 < ns && shapes_ok; ++s2)
        shape(m.ract(t, s, s2).dom == tensor_obj(m.at(t, s), m.source.hom_ob(s, s2)) &&
                  m.ract(t, s, s2).cod == m.at(t, s2),
              "right action " + triple_str(t, s, s2) + " has wrong endpoints");
  if (!shapes_ok) return rep;

  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s) {
      auto lu = seq(tensor_mor(m.target.unit[size_t(t)], identity(m.at(t, s))), m.lact(t, t, s));
      if (lu != left_unitor(m.at(t, s)))
        rep.violations.push_back("left action unit law fails at (t,s)=" + pair_str(t, s));
      auto ru = seq(tensor_mor(identity(m.at(t, s)), m.source.unit[size_t(s)]), m.ract(t, s, s));
      if (ru != right_unitor(m.at(t, s)))
        rep.violations.push_back("right action unit law fails at (t,s)=" + pair_str(t, s));
    }

  for (int t3 = 0; t3 < nt; ++t3)
    for (int t2 = 0; t2 < nt; ++t2)
      for (int t = 0; t < nt; ++t)
        for (int s = 0; s < ns; ++s) {
          auto r1 = seq(tensor_mor(m.target.mu(t3, t2, t), identity(m.at(t, s))),
                        m.lact(t3, t, s));
          auto r2 = seq(associator(m.target.hom_ob(t3, t2), m.target.hom_ob(t2, t), m.at(t, s)),
                        tensor_mor(identity(m.target.hom_ob(t3, t2)), m.lact(t2, t, s)),
                        m.lact(t3, t2, s));
          if (r1 != r2)
            rep.violations.push_back("left action associativity fails at (t'',t',t,s)=(" +
                                     std::to_string(t3) + "," + std::to_string(t2) + "," +
                                     std::to_string(t) + "," + std::to_string(s) + ")");
        }

  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s)
      for (int s2 = 0; s2 < ns; ++s2)
        for (int s3 = 0; s3 < ns; ++s3) {
          auto r1 = seq(tensor_mor(m.ract(t, s, s2), identity(m.source.hom_ob(s2, s3))),
                        m.ract(t, s2, s3));
          auto r2 = seq(associator(m.at(t, s), m.source.hom_ob(s, s2), m.source.hom_ob(s2, s3)),
                        tensor_mor(identity(m.at(t, s)), m.source.mu(s, s2, s3)),
                        m.ract(t, s, s3));
          if (r1 != r2)
            rep.violations.push_back("right action associativity fails at (t,s,s',s'')=(" +
                                     std::to_string(t) + "," + std::to_string(s) + "," +
                                     std::to_string(s2) + "," + std::to_string(s3) + ")");
        }

  for (int t2 = 0; t2 < nt; ++t2)
    for (int t = 0; t < nt; ++t)
      for (int s = 0; s < ns; ++s)
        for (int s2 = 0; s2 < ns; ++s2) {
          auto r1 = seq(tensor_mor(m.lact(t2, t, s), identity(m.source.hom_ob(s, s2))),
                        m.ract(t2, s, s2));
          auto r2 = seq(associator(m.target.hom_ob(t2, t), m.at(t, s), m.source.hom_ob(s, s2)),
                        tensor_mor(identity(m.target.hom_ob(t2, t)), m.ract(t, s, s2)),
                        m.lact(t2, t, s2));
          if (r1 != r2)
            rep.violations.push_back("action compatibility fails at (t',t,s,s')=(" +
                                     std::to_string(t2) + "," + std::to_string(t) + "," +
                                     std::to_string(s) + "," + std::to_string(s2) + ")");
        }
  return rep;
}

Report check_profmap(const ProfMap& a) {
  Report rep;
  const int ns = a.dom.ns(), nt = a.dom.nt();
  bool shapes_ok = true;
  auto shape = [&](bool cond, const std::string& msg) {
    if (!cond) {
      rep.violations.push_back(msg);
      shapes_ok = false;
    }
  };

  shape(a.dom.source == a.cod.source && a.dom.target == a.cod.target,
        "module map endpoints have different source or target");
  shape(a.components.size() == size_t(nt) * ns, "component table has wrong arity");
  if (!shapes_ok) return rep;
  for (int t = 0; t < nt && shapes_ok; ++t)
    for (int s = 0; s < ns && shapes_ok; ++s)
      shape(a.at(t, s).dom == a.dom.at(t, s) && a.at(t, s).cod == a.cod.at(t, s),
            "component " + pair_str(t, s) + " has wrong endpoints");
  if (!shapes_ok) return rep;

  for (int t2 = 0; t2 < nt; ++t2)
    for (int t = 0; t < nt; ++t)
      for (int s = 0; s < ns; ++s) {
        auto r1 = seq(tensor_mor(identity(a.dom.target.hom_ob(t2, t)), a.at(t, s)),
                      a.cod.lact(t2, t, s));
        auto r2 = seq(a.dom.lact(t2, t, s), a.at(t2, s));
        if (r1 != r2)
          rep.violations.push_back("left equivariance fails at (t',t,s)=" + triple_str(t2, t, s));
      }
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s)
      for (int s2 = 0; s2 < ns; ++s2) {
        auto r1 = seq(tensor_mor(a.at(t, s), identity(a.dom.source.hom_ob(s, s2))),
                      a.cod.ract(t, s, s2));
        auto r2 = seq(a.dom.ract(t, s, s2), a.at(t, s2));
        if (r1 != r2)
          rep.violations.push_back("right equivariance fails at (t,s,s')=" + triple_str(t, s, s2));
      }
  return rep;
}

VCategory unit_category(BaseTag tag) {
  VCategory c;
  c.tag = tag;
  auto I = unit_obj(tag);
  c.objects = {I};
  c.hom = {I};
  c.unit = {identity(I)};
  c.comp = {left_unitor(I)};
  return c;
}

VFunctor identity_functor(const VCategory& c) {
  VFunctor f;
  f.dom = c;
  f.cod = c;
  f.object_map.resize(size_t(c.size()));
  for (int a = 0; a < c.size(); ++a) f.object_map[size_t(a)] = a;
  for (int b = 0; b < c.size(); ++b)
    for (int a = 0; a < c.size(); ++a) f.action.push_back(identity(c.hom_ob(b, a)));
  return f;
}

VFunctor const_functor(const VCategory& c, int obj) {
  VFunctor f;
  f.dom = unit_category(c.tag);
  f.cod = c;
  f.object_map = {obj};
  f.action = {c.unit[size_t(obj)]};
  return f;
}

Profunctor identity_profunctor(const VCategory& a) {
  Profunctor m;
  m.source = a;
  m.target = a;
  const int n = a.size();
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) m.components.push_back(a.hom_ob(t, s));
  for (int t2 = 0; t2 < n; ++t2)
    for (int t = 0; t < n; ++t)
      for (int s = 0; s < n; ++s) m.left_action.push_back(a.mu(t2, t, s));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      for (int s2 = 0; s2 < n; ++s2) m.right_action.push_back(a.mu(t, s, s2));
  return m;
}

Profunctor hom_profunctor(const VFunctor& f, const VFunctor& g) {
  if (f.cod != g.cod) throw CatError("hom module needs functors into the same category");
  const VCategory& c = f.cod;
  Profunctor m;
  m.source = f.dom;
  m.target = g.dom;
  const int ns = m.source.size(), nt = m.target.size();
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s) m.components.push_back(c.hom_ob(g.ob(t), f.ob(s)));
  for (int t2 = 0; t2 < nt; ++t2)
    for (int t = 0; t < nt; ++t)
      for (int s = 0; s < ns; ++s)
        m.left_action.push_back(
            seq(tensor_mor(g.act(t2, t), identity(c.hom_ob(g.ob(t), f.ob(s)))),
                c.mu(g.ob(t2), g.ob(t), f.ob(s))));
  for (int t = 0; t < nt; ++t)
    for (int s = 0; s < ns; ++s)
      for (int s2 = 0; s2 < ns; ++s2)
        m.right_action.push_back(
            seq(tensor_mor(identity(c.hom_ob(g.ob(t), f.ob(s))), f.act(s, s2)),
                c.mu(g.ob(t), f.ob(s), f.ob(s2))));
  return m;
}

ProfMap identity_profmap(const Profunctor& m) {
  ProfMap a;
  a.dom = m;
  a.cod = m;
  for (int t = 0; t < m.nt(); ++t)
    for (int s = 0; s < m.ns(); ++s) a.components.push_back(identity(m.at(t, s)));
  return a;
}

}  // namespace absolim
