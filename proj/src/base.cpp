#include "absolim/base.hpp"

#include <algorithm>
#include <numeric>

namespace absolim {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw CatError(msg);
}

void check_tag(const BaseMorphism& f, const BaseMorphism& g) {
  require(f.tag == g.tag, "morphisms from different bases");
}

long ipow_capped(int base, int exp, long cap) {
  long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    require(r <= cap, "carrier too large to enumerate");
  }
  return r;
}

int smash_index(int nb, int i, int j) {
  return (i == 0 || j == 0) ? 0 : (i - 1) * (nb - 1) + (j - 1) + 1;
}

// ---- suplat tensor: quotient of the down-set lattice of the product poset
// by the bilinearity congruence, computed as a closure on bitmasks ----------

struct SupTensor {
  Lat a, b;
  int n = 0;
  std::vector<uint64_t> pd;                           // principal down-sets
  std::vector<std::pair<uint64_t, uint64_t>> rules;   // subset trigger -> forced bits
  std::vector<uint64_t> carrier;                      // closed masks, ascending
  Lat result;

  uint64_t pd_of(int i, int j) const { return pd[size_t(i) * b.n + j]; }

  uint64_t close(uint64_t w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [s, t] : rules)
        if ((s & ~w) == 0 && (t & ~w) != 0) {
          w |= t;
          changed = true;
        }
    }
    return w;
  }

  int index_of_closed(uint64_t m) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), m);
    require(it != carrier.end() && *it == m, "element is not a closed down-set");
    return int(it - carrier.begin());
  }

  int pure(int i, int j) const { return index_of_closed(close(pd_of(i, j))); }
};

SupTensor make_sup_tensor(const Lat& a, const Lat& b) {
  SupTensor st;
  st.a = a;
  st.b = b;
  st.n = a.n * b.n;
  require(st.n <= 64, "suplat tensor carrier exceeds 64 generators");

  st.pd.assign(size_t(a.n) * b.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      uint64_t m = 0;
      for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y)
          if (a.le(x, i) && b.le(y, j)) m |= uint64_t(1) << (x * b.n + y);
      st.pd[size_t(i) * b.n + j] = m;
    }

  uint64_t zero = 0;
  for (int j = 0; j < b.n; ++j) zero |= st.pd_of(0, j);
  for (int i = 0; i < a.n; ++i) zero |= st.pd_of(i, 0);
  st.rules.emplace_back(0, zero);

  auto ja = join_table(a);
  auto jb = join_table(b);
  for (int x = 0; x < a.n; ++x)
    for (int x2 = x + 1; x2 < a.n; ++x2) {
      if (a.le(x, x2) || a.le(x2, x)) continue;
      for (int y = 0; y < b.n; ++y) {
        uint64_t u = st.pd_of(ja[size_t(x) * a.n + x2], y);
        uint64_t v = st.pd_of(x, y) | st.pd_of(x2, y);
        if (v != u) st.rules.emplace_back(v, u);
      }
    }
  for (int y = 0; y < b.n; ++y)
    for (int y2 = y + 1; y2 < b.n; ++y2) {
      if (b.le(y, y2) || b.le(y2, y)) continue;
      for (int x = 0; x < a.n; ++x) {
        uint64_t u = st.pd_of(x, jb[size_t(y) * b.n + y2]);
        uint64_t v = st.pd_of(x, y) | st.pd_of(x, y2);
        if (v != u) st.rules.emplace_back(v, u);
      }
    }

  std::vector<uint8_t> pl(size_t(st.n) * st.n, 0);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j)
      for (int i2 = 0; i2 < a.n; ++i2)
        for (int j2 = 0; j2 < b.n; ++j2)
          pl[size_t(i * b.n + j) * st.n + (i2 * b.n + j2)] =
              (a.le(i, i2) && b.le(j, j2)) ? 1 : 0;
  for (uint64_t m : enumerate_downsets(st.n, pl))
    if (st.close(m) == m) st.carrier.push_back(m);

  st.result.n = int(st.carrier.size());
  st.result.leq.assign(st.carrier.size() * st.carrier.size(), 0);
  for (size_t i = 0; i < st.carrier.size(); ++i)
    for (size_t j = 0; j < st.carrier.size(); ++j)
      st.result.leq[i * st.carrier.size() + j] = (st.carrier[i] & ~st.carrier[j]) == 0 ? 1 : 0;
  return st;
}

// Join of the image of a pure-tensor assignment over one carrier mask.
template <typename F>
int fold_mask(const SupTensor& st, uint64_t mask, const Lat& target,
              const std::vector<int>& jt_target, F&& pure_value) {
  int acc = 0;
  for (int bit = 0; bit < st.n; ++bit)
    if (mask & (uint64_t(1) << bit)) {
      int i = bit / st.b.n, j = bit % st.b.n;
      acc = jt_target[size_t(acc) * target.n + pure_value(i, j)];
    }
  return acc;
}

// Same, but the values land in another tensor and are joined as masks.
template <typename F>
uint64_t fold_mask_into(const SupTensor& st, uint64_t mask, F&& pure_mask) {
  uint64_t acc = 0;
  for (int bit = 0; bit < st.n; ++bit)
    if (mask & (uint64_t(1) << bit)) acc |= pure_mask(bit / st.b.n, bit % st.b.n);
  return acc;
}

}  // namespace

std::string tag_name(BaseTag t) {
  switch (t) {
    case BaseTag::finset: return "finset";
    case BaseTag::finset_ptd: return "finset_ptd";
    case BaseTag::matq: return "matq";
    case BaseTag::suplat: return "suplat";
  }
  return "?";
}

BaseObject finset_obj(int n) {
  require(n >= 0, "finset object needs cardinality >= 0");
  BaseObject o;
  o.tag = BaseTag::finset;
  o.n = n;
  return o;
}

BaseObject finset_ptd_obj(int n) {
  require(n >= 1, "pointed object needs cardinality >= 1");
  BaseObject o;
  o.tag = BaseTag::finset_ptd;
  o.n = n;
  return o;
}

BaseObject matq_obj(int dim) {
  require(dim >= 0, "matq object needs dimension >= 0");
  BaseObject o;
  o.tag = BaseTag::matq;
  o.n = dim;
  return o;
}

BaseObject suplat_obj(Lat l) {
  require(l.n >= 1 && l.leq.size() == size_t(l.n) * l.n, "suplat object: malformed leq table");
  auto perm = bottom_first_permutation(l);
  require(!perm.empty(), "suplat object: no least element");
  Lat r = apply_permutation(l, perm);
  auto err = validate_lattice(r);
  require(err.empty(), "suplat object: " + err);
  BaseObject o;
  o.tag = BaseTag::suplat;
  o.n = r.n;
  o.lat = std::move(r);
  return o;
}

BaseMorphism make_table_morphism(const BaseObject& dom, const BaseObject& cod,
                                 std::vector<int> table) {
  require(dom.tag == cod.tag, "morphism endpoints from different bases");
  require(dom.tag != BaseTag::matq, "matq morphisms are matrices, not tables");
  require(table.size() == size_t(dom.n), "table size does not match domain");
  for (size_t i = 0; i < table.size(); ++i)
    require(table[i] >= 0 && table[i] < cod.n,
            "table value out of range at index " + std::to_string(i));
  if (dom.tag == BaseTag::finset_ptd)
    require(table[0] == 0, "pointed map must send basepoint to basepoint");
  if (dom.tag == BaseTag::suplat)
    require(is_join_map(dom.lat, cod.lat, table), "table is not join-preserving");
  BaseMorphism m;
  m.tag = dom.tag;
  m.dom = dom;
  m.cod = cod;
  m.table = std::move(table);
  return m;
}

BaseMorphism make_matq_morphism(const BaseObject& dom, const BaseObject& cod, QMat mat) {
  require(dom.tag == BaseTag::matq && cod.tag == BaseTag::matq, "matrix morphism needs matq endpoints");
  require(mat.rows() == cod.n && mat.cols() == dom.n,
          "matrix shape must be cod x dom");
  BaseMorphism m;
  m.tag = BaseTag::matq;
  m.dom = dom;
  m.cod = cod;
  m.mat = std::move(mat);
  return m;
}

BaseMorphism identity(const BaseObject& a) {
  if (a.tag == BaseTag::matq) return make_matq_morphism(a, a, QMat::identity(a.n));
  std::vector<int> t(a.n);
  std::iota(t.begin(), t.end(), 0);
  return make_table_morphism(a, a, std::move(t));
}

BaseMorphism seq(const BaseMorphism& f, const BaseMorphism& g) {
  check_tag(f, g);
  require(f.cod == g.dom, "morphisms are not composable");
  if (f.tag == BaseTag::matq) return make_matq_morphism(f.dom, g.cod, g.mat * f.mat);
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = g.table[size_t(f.table[i])];
  return make_table_morphism(f.dom, g.cod, std::move(t));
}

BaseObject unit_obj(BaseTag t) {
  switch (t) {
    case BaseTag::finset: return finset_obj(1);
    case BaseTag::finset_ptd: return finset_ptd_obj(2);
    case BaseTag::matq: return matq_obj(1);
    case BaseTag::suplat: {
      Lat two;
      two.n = 2;
      two.leq = {1, 1, 0, 1};
      return suplat_obj(two);
    }
  }
  throw CatError("unknown base tag");
}

BaseObject tensor_obj(const BaseObject& a, const BaseObject& b) {
  require(a.tag == b.tag, "tensor of objects from different bases");
  switch (a.tag) {
    case BaseTag::finset: return finset_obj(a.n * b.n);
    case BaseTag::finset_ptd: return finset_ptd_obj(1 + (a.n - 1) * (b.n - 1));
    case BaseTag::matq: return matq_obj(a.n * b.n);
    case BaseTag::suplat: {
      auto st = make_sup_tensor(a.lat, b.lat);
      BaseObject o;
      o.tag = BaseTag::suplat;
      o.n = st.result.n;
      o.lat = st.result;
      return o;
    }
  }
  throw CatError("unknown base tag");
}

int pure_tensor_index(const BaseObject& a, const BaseObject& b, int i, int j) {
  require(i >= 0 && i < a.n && j >= 0 && j < b.n, "pure tensor coordinates out of range");
  switch (a.tag) {
    case BaseTag::finset: return i * b.n + j;
    case BaseTag::finset_ptd: return smash_index(b.n, i, j);
    case BaseTag::matq: return i * b.n + j;
    case BaseTag::suplat: return make_sup_tensor(a.lat, b.lat).pure(i, j);
  }
  throw CatError("unknown base tag");
}

BaseMorphism tensor_mor(const BaseMorphism& f, const BaseMorphism& g) {
  check_tag(f, g);
  BaseObject dom = tensor_obj(f.dom, g.dom);
  BaseObject cod = tensor_obj(f.cod, g.cod);
  switch (f.tag) {
    case BaseTag::finset: {
      std::vector<int> t(size_t(dom.n));
      for (int i = 0; i < f.dom.n; ++i)
        for (int j = 0; j < g.dom.n; ++j)
          t[size_t(i) * g.dom.n + j] = f.table[i] * g.cod.n + g.table[j];
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> t(size_t(dom.n), 0);
      for (int i = 1; i < f.dom.n; ++i)
        for (int j = 1; j < g.dom.n; ++j)
          t[size_t(smash_index(g.dom.n, i, j))] =
              smash_index(g.cod.n, f.table[i], g.table[j]);
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::matq:
      return make_matq_morphism(dom, cod, kron(f.mat, g.mat));
    case BaseTag::suplat: {
      auto sd = make_sup_tensor(f.dom.lat, g.dom.lat);
      auto sc = make_sup_tensor(f.cod.lat, g.cod.lat);
      std::vector<int> t(sd.carrier.size());
      for (size_t c = 0; c < sd.carrier.size(); ++c) {
        uint64_t m = fold_mask_into(sd, sd.carrier[c], [&](int i, int j) {
          return sc.pd_of(f.table[i], g.table[j]);
        });
        t[c] = sc.index_of_closed(sc.close(m));
      }
      return make_table_morphism(dom, cod, std::move(t));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism associator(const BaseObject& a, const BaseObject& b, const BaseObject& c) {
  BaseObject lhs = tensor_obj(tensor_obj(a, b), c);
  BaseObject rhs = tensor_obj(a, tensor_obj(b, c));
  if (a.tag != BaseTag::suplat) {
    // shared carrier: row-major and Kronecker indexing are associative
    if (a.tag == BaseTag::matq) return make_matq_morphism(lhs, rhs, QMat::identity(lhs.n));
    std::vector<int> t(lhs.n);
    std::iota(t.begin(), t.end(), 0);
    return make_table_morphism(lhs, rhs, std::move(t));
  }
  auto sab = make_sup_tensor(a.lat, b.lat);
  auto sbc = make_sup_tensor(b.lat, c.lat);
  auto sl = make_sup_tensor(sab.result, c.lat);
  auto sr = make_sup_tensor(a.lat, sbc.result);
  std::vector<int> t(sl.carrier.size());
  for (size_t ci = 0; ci < sl.carrier.size(); ++ci) {
    uint64_t acc = 0;
    for (int bit = 0; bit < sl.n; ++bit)
      if (sl.carrier[ci] & (uint64_t(1) << bit)) {
        int s = bit / c.lat.n, k = bit % c.lat.n;
        acc |= fold_mask_into(sab, sab.carrier[size_t(s)], [&](int i, int j) {
          return sr.pd_of(i, sbc.pure(j, k));
        });
      }
    t[ci] = sr.index_of_closed(sr.close(acc));
  }
  return make_table_morphism(lhs, rhs, std::move(t));
}

BaseMorphism left_unitor(const BaseObject& a) {
  BaseObject dom = tensor_obj(unit_obj(a.tag), a);
  if (a.tag == BaseTag::matq) return make_matq_morphism(dom, a, QMat::identity(a.n));
  if (a.tag != BaseTag::suplat) {
    std::vector<int> t(dom.n);
    std::iota(t.begin(), t.end(), 0);
    return make_table_morphism(dom, a, std::move(t));
  }
  auto st = make_sup_tensor(unit_obj(a.tag).lat, a.lat);
  auto jt = join_table(a.lat);
  std::vector<int> t(st.carrier.size());
  for (size_t c = 0; c < st.carrier.size(); ++c)
    t[c] = fold_mask(st, st.carrier[c], a.lat, jt,
                     [&](int x, int y) { return x == 1 ? y : 0; });
  return make_table_morphism(dom, a, std::move(t));
}

BaseMorphism right_unitor(const BaseObject& a) {
  BaseObject dom = tensor_obj(a, unit_obj(a.tag));
  if (a.tag == BaseTag::matq) return make_matq_morphism(dom, a, QMat::identity(a.n));
  if (a.tag != BaseTag::suplat) {
    std::vector<int> t(dom.n);
    std::iota(t.begin(), t.end(), 0);
    return make_table_morphism(dom, a, std::move(t));
  }
  auto st = make_sup_tensor(a.lat, unit_obj(a.tag).lat);
  auto jt = join_table(a.lat);
  std::vector<int> t(st.carrier.size());
  for (size_t c = 0; c < st.carrier.size(); ++c)
    t[c] = fold_mask(st, st.carrier[c], a.lat, jt,
                     [&](int x, int y) { return y == 1 ? x : 0; });
  return make_table_morphism(dom, a, std::move(t));
}

BaseMorphism braiding(const BaseObject& a, const BaseObject& b) {
  BaseObject dom = tensor_obj(a, b);
  BaseObject cod = tensor_obj(b, a);
  switch (a.tag) {
    case BaseTag::finset: {
      std::vector<int> t(dom.n);
      for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) t[size_t(i) * b.n + j] = j * a.n + i;
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> t(dom.n, 0);
      for (int i = 1; i < a.n; ++i)
        for (int j = 1; j < b.n; ++j)
          t[size_t(smash_index(b.n, i, j))] = smash_index(a.n, j, i);
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::matq: {
      QMat p(cod.n, dom.n);
      for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < b.n; ++j) p.at(j * a.n + i, i * b.n + j) = 1;
      return make_matq_morphism(dom, cod, std::move(p));
    }
    case BaseTag::suplat: {
      auto sd = make_sup_tensor(a.lat, b.lat);
      auto sc = make_sup_tensor(b.lat, a.lat);
      std::vector<int> t(sd.carrier.size());
      for (size_t c = 0; c < sd.carrier.size(); ++c) {
        uint64_t m = fold_mask_into(sd, sd.carrier[c],
                                    [&](int i, int j) { return sc.pd_of(j, i); });
        t[c] = sc.index_of_closed(sc.close(m));
      }
      return make_table_morphism(dom, cod, std::move(t));
    }
  }
  throw CatError("unknown base tag");
}

CoproductResult coproduct(BaseTag tag, const std::vector<BaseObject>& parts) {
  for (const auto& p : parts) require(p.tag == tag, "coproduct part from wrong base");
  CoproductResult r;
  switch (tag) {
    case BaseTag::finset: {
      int total = 0;
      for (const auto& p : parts) total += p.n;
      r.obj = finset_obj(total);
      int off = 0;
      for (const auto& p : parts) {
        std::vector<int> t(p.n);
        std::iota(t.begin(), t.end(), off);
        r.injections.push_back(make_table_morphism(p, r.obj, std::move(t)));
        off += p.n;
      }
      return r;
    }
    case BaseTag::finset_ptd: {
      int total = 1;
      for (const auto& p : parts) total += p.n - 1;
      r.obj = finset_ptd_obj(total);
      int off = 1;
      for (const auto& p : parts) {
        std::vector<int> t(p.n, 0);
        for (int i = 1; i < p.n; ++i) t[i] = off + i - 1;
        r.injections.push_back(make_table_morphism(p, r.obj, std::move(t)));
        off += p.n - 1;
      }
      return r;
    }
    case BaseTag::matq: {
      int total = 0;
      for (const auto& p : parts) total += p.n;
      r.obj = matq_obj(total);
      int off = 0;
      for (const auto& p : parts) {
        QMat m(total, p.n);
        for (int i = 0; i < p.n; ++i) m.at(off + i, i) = 1;
        r.injections.push_back(make_matq_morphism(p, r.obj, std::move(m)));
        off += p.n;
      }
      return r;
    }
    case BaseTag::suplat: {
      // biproduct: the product lattice, injections pad with bottoms
      std::vector<int> dims;
      long total = 1;
      for (const auto& p : parts) {
        dims.push_back(p.n);
        total *= p.n;
        require(total <= (1 << 20), "suplat biproduct carrier too large");
      }
      int tn = int(total);
      Lat prod;
      prod.n = tn;
      prod.leq.assign(size_t(tn) * tn, 0);
      auto digits = [&](int idx) {
        std::vector<int> d(dims.size());
        for (int k = int(dims.size()) - 1; k >= 0; --k) {
          d[size_t(k)] = idx % dims[size_t(k)];
          idx /= dims[size_t(k)];
        }
        return d;
      };
      for (int u = 0; u < tn; ++u) {
        auto du = digits(u);
        for (int v = 0; v < tn; ++v) {
          auto dv = digits(v);
          bool le = true;
          for (size_t k = 0; k < dims.size(); ++k)
            if (!parts[k].lat.le(du[k], dv[k])) { le = false; break; }
          prod.leq[size_t(u) * tn + v] = le ? 1 : 0;
        }
      }
      r.obj = suplat_obj(prod);
      for (size_t b = 0; b < parts.size(); ++b) {
        int stride = 1;
        for (size_t k = b + 1; k < dims.size(); ++k) stride *= dims[k];
        std::vector<int> t(parts[b].n);
        for (int i = 0; i < parts[b].n; ++i) t[i] = i * stride;
        r.injections.push_back(make_table_morphism(parts[b], r.obj, std::move(t)));
      }
      return r;
    }
  }
  throw CatError("unknown base tag");
}

ProductResult product(BaseTag tag, const std::vector<BaseObject>& parts) {
  for (const auto& p : parts) require(p.tag == tag, "product part from wrong base");
  ProductResult r;
  switch (tag) {
    case BaseTag::matq: {
      auto cp = coproduct(tag, parts);
      r.obj = cp.obj;
      int off = 0;
      for (const auto& p : parts) {
        QMat m(p.n, r.obj.n);
        for (int i = 0; i < p.n; ++i) m.at(i, off + i) = 1;
        r.projections.push_back(make_matq_morphism(r.obj, p, std::move(m)));
        off += p.n;
      }
      return r;
    }
    case BaseTag::suplat: {
      auto cp = coproduct(tag, parts);
      r.obj = cp.obj;
      break;
    }
    case BaseTag::finset: {
      long total = 1;
      for (const auto& p : parts) {
        total *= p.n;
        require(total <= (1 << 22), "finset product carrier too large");
      }
      r.obj = finset_obj(int(total));
      break;
    }
    case BaseTag::finset_ptd: {
      long total = 1;
      for (const auto& p : parts) {
        total *= p.n;
        require(total <= (1 << 22), "pointed product carrier too large");
      }
      r.obj = finset_ptd_obj(int(total));
      break;
    }
  }
  // digit projections, first factor most significant
  for (size_t b = 0; b < parts.size(); ++b) {
    int stride = 1;
    for (size_t k = b + 1; k < parts.size(); ++k) stride *= parts[k].n;
    std::vector<int> t(r.obj.n);
    for (int idx = 0; idx < r.obj.n; ++idx) t[size_t(idx)] = (idx / stride) % parts[b].n;
    r.projections.push_back(make_table_morphism(r.obj, parts[b], std::move(t)));
  }
  return r;
}

BaseMorphism from_coproduct(const CoproductResult& cp, const std::vector<BaseMorphism>& fs,
                            std::optional<BaseObject> cod) {
  require(fs.size() == cp.injections.size(), "cotuple arity mismatch");
  for (size_t b = 0; b < fs.size(); ++b)
    require(fs[b].dom == cp.injections[b].dom, "cotuple component has wrong domain");
  BaseObject target;
  if (cod) {
    target = *cod;
  } else {
    require(!fs.empty(), "empty cotuple needs an explicit codomain");
    target = fs[0].cod;
  }
  for (const auto& f : fs) require(f.cod == target, "cotuple components disagree on codomain");

  switch (cp.obj.tag) {
    case BaseTag::finset: {
      std::vector<int> t(cp.obj.n);
      for (size_t b = 0; b < fs.size(); ++b)
        for (int i = 0; i < fs[b].dom.n; ++i) t[size_t(cp.injections[b].table[i])] = fs[b].table[i];
      return make_table_morphism(cp.obj, target, std::move(t));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> t(cp.obj.n, 0);
      for (size_t b = 0; b < fs.size(); ++b)
        for (int i = 1; i < fs[b].dom.n; ++i) t[size_t(cp.injections[b].table[i])] = fs[b].table[i];
      return make_table_morphism(cp.obj, target, std::move(t));
    }
    case BaseTag::matq: {
      QMat m(target.n, cp.obj.n);
      int off = 0;
      for (const auto& f : fs) {
        for (int r2 = 0; r2 < target.n; ++r2)
          for (int c = 0; c < f.dom.n; ++c) m.at(r2, off + c) = f.mat.at(r2, c);
        off += f.dom.n;
      }
      return make_matq_morphism(cp.obj, target, std::move(m));
    }
    case BaseTag::suplat: {
      // cotuple in the biproduct: join of the componentwise images
      auto jt = join_table(target.lat);
      std::vector<int> t(cp.obj.n, 0);
      for (int idx = 0; idx < cp.obj.n; ++idx) {
        int acc = 0;
        for (size_t b = 0; b < fs.size(); ++b) {
          int stride = 1;
          for (size_t k = b + 1; k < fs.size(); ++k) stride *= fs[k].dom.n;
          int digit = (idx / stride) % fs[b].dom.n;
          acc = jt[size_t(acc) * target.n + fs[b].table[size_t(digit)]];
        }
        t[size_t(idx)] = acc;
      }
      return make_table_morphism(cp.obj, target, std::move(t));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism to_product(const ProductResult& pr, const std::vector<BaseMorphism>& fs,
                        std::optional<BaseObject> dom) {
  require(fs.size() == pr.projections.size(), "tuple arity mismatch");
  for (size_t b = 0; b < fs.size(); ++b)
    require(fs[b].cod == pr.projections[b].cod, "tuple component has wrong codomain");
  BaseObject source;
  if (dom) {
    source = *dom;
  } else {
    require(!fs.empty(), "empty tuple needs an explicit domain");
    source = fs[0].dom;
  }
  for (const auto& f : fs) require(f.dom == source, "tuple components disagree on domain");

  if (pr.obj.tag == BaseTag::matq) {
    QMat m(pr.obj.n, source.n);
    int off = 0;
    for (const auto& f : fs) {
      for (int r2 = 0; r2 < f.cod.n; ++r2)
        for (int c = 0; c < source.n; ++c) m.at(off + r2, c) = f.mat.at(r2, c);
      off += f.cod.n;
    }
    return make_matq_morphism(source, pr.obj, std::move(m));
  }
  std::vector<int> t(source.n, 0);
  for (int x = 0; x < source.n; ++x) {
    long idx = 0;
    for (size_t b = 0; b < fs.size(); ++b) idx = idx * fs[b].cod.n + fs[b].table[size_t(x)];
    t[size_t(x)] = int(idx);
  }
  return make_table_morphism(source, pr.obj, std::move(t));
}

SubobjectResult equalizer(const BaseMorphism& f, const BaseMorphism& g) {
  check_tag(f, g);
  require(f.dom == g.dom && f.cod == g.cod, "equalizer needs a parallel pair");
  SubobjectResult r;
  if (f.tag == BaseTag::matq) {
    QMat k = kernel_basis(f.mat - g.mat);
    r.obj = matq_obj(k.cols());
    r.inclusion = make_matq_morphism(r.obj, f.dom, std::move(k));
    return r;
  }
  std::vector<int> sel;
  for (int i = 0; i < f.dom.n; ++i)
    if (f.table[i] == g.table[i]) sel.push_back(i);
  switch (f.tag) {
    case BaseTag::finset: r.obj = finset_obj(int(sel.size())); break;
    case BaseTag::finset_ptd: r.obj = finset_ptd_obj(int(sel.size())); break;
    case BaseTag::suplat: {
      // agreement set of two join maps is closed under joins and has bottom 0
      Lat sub;
      sub.n = int(sel.size());
      sub.leq.assign(sel.size() * sel.size(), 0);
      for (size_t i = 0; i < sel.size(); ++i)
        for (size_t j = 0; j < sel.size(); ++j)
          sub.leq[i * sel.size() + j] = f.dom.lat.le(sel[i], sel[j]) ? 1 : 0;
      r.obj = suplat_obj(sub);
      break;
    }
    default: throw CatError("unknown base tag");
  }
  r.inclusion = make_table_morphism(r.obj, f.dom, std::move(sel));
  return r;
}

QuotientResult coequalizer(const BaseMorphism& f, const BaseMorphism& g) {
  check_tag(f, g);
  require(f.dom == g.dom && f.cod == g.cod, "coequalizer needs a parallel pair");
  QuotientResult r;
  if (f.tag == BaseTag::matq) {
    QMat p = cokernel_projection(f.mat - g.mat);
    r.obj = matq_obj(p.rows());
    r.projection = make_matq_morphism(f.cod, r.obj, std::move(p));
    return r;
  }
  if (f.tag == BaseTag::suplat) {
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i < f.dom.n; ++i) gens.emplace_back(f.table[i], g.table[i]);
    auto q = closure_quotient(f.cod.lat, gens);
    r.obj = suplat_obj(quotient_lattice(f.cod.lat, q));
    r.projection = make_table_morphism(f.cod, r.obj, q.proj);
    return r;
  }
  // union-find over the codomain, classes listed by least member
  std::vector<int> parent(f.cod.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < f.dom.n; ++i) {
    int a = find(f.table[i]), b = find(g.table[i]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> roots;
  for (int x = 0; x < f.cod.n; ++x)
    if (find(x) == x) roots.push_back(x);
  std::vector<int> proj(f.cod.n);
  for (int x = 0; x < f.cod.n; ++x)
    proj[x] = int(std::lower_bound(roots.begin(), roots.end(), find(x)) - roots.begin());
  r.obj = f.tag == BaseTag::finset ? finset_obj(int(roots.size()))
                                   : finset_ptd_obj(int(roots.size()));
  r.projection = make_table_morphism(f.cod, r.obj, std::move(proj));
  return r;
}

BaseMorphism induce_from_coequalizer(const BaseMorphism& epi, const BaseMorphism& h) {
  check_tag(epi, h);
  require(epi.dom == h.dom, "factorization needs a shared domain");
  if (epi.tag == BaseTag::matq) {
    auto rt = solve(epi.mat.transpose(), h.mat.transpose());
    require(rt.has_value(), "map does not factor through the surjection");
    QMat r = rt->transpose();
    require(r * epi.mat == h.mat, "map does not factor through the surjection");
    return make_matq_morphism(epi.cod, h.cod, std::move(r));
  }
  std::vector<int> t(size_t(epi.cod.n), -1);
  for (int i = 0; i < epi.dom.n; ++i)
    if (t[size_t(epi.table[i])] < 0) t[size_t(epi.table[i])] = h.table[i];
  for (int q = 0; q < epi.cod.n; ++q)
    require(t[size_t(q)] >= 0, "factorization through a non-surjective map");
  for (int i = 0; i < epi.dom.n; ++i)
    require(t[size_t(epi.table[i])] == h.table[i],
            "map is not constant on fibers (witness index " + std::to_string(i) + ")");
  return make_table_morphism(epi.cod, h.cod, std::move(t));
}

BaseMorphism restrict_through_equalizer(const BaseMorphism& mono, const BaseMorphism& h) {
  check_tag(mono, h);
  require(mono.cod == h.cod, "corestriction needs a shared codomain");
  if (mono.tag == BaseTag::matq) {
    auto r = solve(mono.mat, h.mat);
    require(r.has_value(), "map does not land in the subobject");
    require(mono.mat * *r == h.mat, "map does not land in the subobject");
    return make_matq_morphism(h.dom, mono.dom, std::move(*r));
  }
  std::vector<int> where(size_t(mono.cod.n), -1);
  for (int s = 0; s < mono.dom.n; ++s) {
    require(where[size_t(mono.table[s])] < 0, "corestriction through a non-injective map");
    where[size_t(mono.table[s])] = s;
  }
  std::vector<int> t(size_t(h.dom.n));
  for (int x = 0; x < h.dom.n; ++x) {
    int s = where[size_t(h.table[x])];
    require(s >= 0, "map does not land in the subobject (witness index " + std::to_string(x) + ")");
    t[size_t(x)] = s;
  }
  return make_table_morphism(h.dom, mono.dom, std::move(t));
}

// ---- internal homs ---------------------------------------------------------

namespace {

BaseObject hom_obj(const BaseObject& a, const BaseObject& x) {
  require(a.tag == x.tag, "hom of objects from different bases");
  switch (a.tag) {
    case BaseTag::finset:
      return finset_obj(int(ipow_capped(x.n, a.n, 1 << 22)));
    case BaseTag::finset_ptd:
      return finset_ptd_obj(int(ipow_capped(x.n, a.n - 1, 1 << 22)));
    case BaseTag::matq:
      return matq_obj(a.n * x.n);
    case BaseTag::suplat: {
      auto maps = enumerate_join_maps(a.lat, x.lat);
      Lat h;
      h.n = int(maps.size());
      h.leq.assign(maps.size() * maps.size(), 0);
      for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = 0; j < maps.size(); ++j) {
          bool le = true;
          for (int k = 0; k < a.n; ++k)
            if (!x.lat.le(maps[i][size_t(k)], maps[j][size_t(k)])) { le = false; break; }
          h.leq[i * maps.size() + j] = le ? 1 : 0;
        }
      // bottom is the constant-bottom map, lexicographically first
      BaseObject o;
      o.tag = BaseTag::suplat;
      o.n = h.n;
      o.lat = std::move(h);
      return o;
    }
  }
  throw CatError("unknown base tag");
}

std::vector<int> decode_map(const BaseObject& a, const BaseObject& x, long idx) {
  std::vector<int> t(size_t(a.n), 0);
  int first = a.tag == BaseTag::finset_ptd ? 1 : 0;
  for (int i = a.n - 1; i >= first; --i) {
    t[size_t(i)] = int(idx % x.n);
    idx /= x.n;
  }
  return t;
}

long encode_map(const BaseObject& a, const BaseObject& x, const std::vector<int>& t) {
  long idx = 0;
  int first = a.tag == BaseTag::finset_ptd ? 1 : 0;
  for (int i = first; i < a.n; ++i) idx = idx * x.n + t[size_t(i)];
  return idx;
}

}  // namespace

BaseObject hom_left(const BaseObject& a, const BaseObject& x) { return hom_obj(a, x); }
BaseObject hom_right(const BaseObject& a, const BaseObject& x) { return hom_obj(a, x); }

int hom_size(const BaseObject& a, const BaseObject& x) {
  require(a.tag != BaseTag::matq, "matq hom carriers are not enumerable");
  return hom_obj(a, x).n;
}

BaseMorphism hom_element(const BaseObject& a, const BaseObject& x, int idx) {
  require(a.tag != BaseTag::matq, "matq hom carriers are not enumerable");
  require(idx >= 0 && idx < hom_size(a, x), "hom element index out of range");
  if (a.tag == BaseTag::suplat) return make_table_morphism(a, x, enumerate_join_maps(a.lat, x.lat)[size_t(idx)]);
  return make_table_morphism(a, x, decode_map(a, x, idx));
}

int hom_index(const BaseObject& a, const BaseObject& x, const BaseMorphism& f) {
  require(a.tag != BaseTag::matq, "matq hom carriers are not enumerable");
  require(f.dom == a && f.cod == x, "morphism endpoints do not match hom carrier");
  if (a.tag == BaseTag::suplat) {
    auto maps = enumerate_join_maps(a.lat, x.lat);
    auto it = std::lower_bound(maps.begin(), maps.end(), f.table);
    require(it != maps.end() && *it == f.table, "morphism missing from hom carrier");
    return int(it - maps.begin());
  }
  return int(encode_map(a, x, f.table));
}

QMat flatten_hom(const QMat& m) {
  QMat col(m.rows() * m.cols(), 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int s = 0; s < m.cols(); ++s) col.at(r * m.cols() + s, 0) = m.at(r, s);
  return col;
}

QMat unflatten_hom(int da, int dx, const QMat& col) {
  require(col.rows() == da * dx && col.cols() == 1, "flattened hom has wrong shape");
  QMat m(dx, da);
  for (int r = 0; r < dx; ++r)
    for (int s = 0; s < da; ++s) m.at(r, s) = col.at(r * da + s, 0);
  return m;
}

BaseMorphism curry_left(const BaseObject& a, const BaseObject& b, const BaseMorphism& f) {
  require(f.dom == tensor_obj(a, b), "curry_left domain is not the stated tensor");
  const BaseObject& x = f.cod;
  BaseObject h = hom_obj(a, x);
  switch (a.tag) {
    case BaseTag::finset: {
      std::vector<int> g(size_t(b.n));
      for (int j = 0; j < b.n; ++j) {
        long idx = 0;
        for (int i = 0; i < a.n; ++i) idx = idx * x.n + f.table[size_t(i) * b.n + j];
        g[size_t(j)] = int(idx);
      }
      return make_table_morphism(b, h, std::move(g));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> g(size_t(b.n), 0);
      for (int j = 0; j < b.n; ++j) {
        long idx = 0;
        for (int i = 1; i < a.n; ++i) idx = idx * x.n + f.table[size_t(smash_index(b.n, i, j))];
        g[size_t(j)] = int(idx);
      }
      return make_table_morphism(b, h, std::move(g));
    }
    case BaseTag::matq: {
      QMat g(h.n, b.n);
      for (int r = 0; r < x.n; ++r)
        for (int s = 0; s < a.n; ++s)
          for (int j = 0; j < b.n; ++j) g.at(r * a.n + s, j) = f.mat.at(r, s * b.n + j);
      return make_matq_morphism(b, h, std::move(g));
    }
    case BaseTag::suplat: {
      auto st = make_sup_tensor(a.lat, b.lat);
      auto maps = enumerate_join_maps(a.lat, x.lat);
      std::vector<int> g(size_t(b.n));
      for (int j = 0; j < b.n; ++j) {
        std::vector<int> t(size_t(a.n));
        for (int i = 0; i < a.n; ++i) t[size_t(i)] = f.table[size_t(st.pure(i, j))];
        auto it = std::lower_bound(maps.begin(), maps.end(), t);
        require(it != maps.end() && *it == t, "curried slice is not join-preserving");
        g[size_t(j)] = int(it - maps.begin());
      }
      return make_table_morphism(b, h, std::move(g));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism uncurry_left(const BaseObject& a, const BaseObject& b, const BaseObject& x,
                          const BaseMorphism& g) {
  BaseObject h = hom_obj(a, x);
  require(g.dom == b && g.cod == h, "uncurry_left argument has wrong endpoints");
  BaseObject dom = tensor_obj(a, b);
  switch (a.tag) {
    case BaseTag::finset: {
      std::vector<int> f(size_t(dom.n));
      for (int j = 0; j < b.n; ++j) {
        auto t = decode_map(a, x, g.table[size_t(j)]);
        for (int i = 0; i < a.n; ++i) f[size_t(i) * b.n + j] = t[size_t(i)];
      }
      return make_table_morphism(dom, x, std::move(f));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> f(size_t(dom.n), 0);
      for (int j = 1; j < b.n; ++j) {
        auto t = decode_map(a, x, g.table[size_t(j)]);
        for (int i = 1; i < a.n; ++i) f[size_t(smash_index(b.n, i, j))] = t[size_t(i)];
      }
      return make_table_morphism(dom, x, std::move(f));
    }
    case BaseTag::matq: {
      QMat f(x.n, dom.n);
      for (int r = 0; r < x.n; ++r)
        for (int s = 0; s < a.n; ++s)
          for (int j = 0; j < b.n; ++j) f.at(r, s * b.n + j) = g.mat.at(r * a.n + s, j);
      return make_matq_morphism(dom, x, std::move(f));
    }
    case BaseTag::suplat: {
      auto st = make_sup_tensor(a.lat, b.lat);
      auto maps = enumerate_join_maps(a.lat, x.lat);
      auto jt = join_table(x.lat);
      std::vector<int> f(st.carrier.size());
      for (size_t c = 0; c < st.carrier.size(); ++c)
        f[c] = fold_mask(st, st.carrier[c], x.lat, jt, [&](int i, int j) {
          return maps[size_t(g.table[size_t(j)])][size_t(i)];
        });
      return make_table_morphism(dom, x, std::move(f));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism curry_right(const BaseObject& b, const BaseObject& a, const BaseMorphism& f) {
  require(f.dom == tensor_obj(b, a), "curry_right domain is not the stated tensor");
  const BaseObject& x = f.cod;
  BaseObject h = hom_obj(a, x);
  switch (a.tag) {
    case BaseTag::finset: {
      std::vector<int> g(size_t(b.n));
      for (int i = 0; i < b.n; ++i) {
        long idx = 0;
        for (int j = 0; j < a.n; ++j) idx = idx * x.n + f.table[size_t(i) * a.n + j];
        g[size_t(i)] = int(idx);
      }
      return make_table_morphism(b, h, std::move(g));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> g(size_t(b.n), 0);
      for (int i = 0; i < b.n; ++i) {
        long idx = 0;
        for (int j = 1; j < a.n; ++j) idx = idx * x.n + f.table[size_t(smash_index(a.n, i, j))];
        g[size_t(i)] = int(idx);
      }
      return make_table_morphism(b, h, std::move(g));
    }
    case BaseTag::matq: {
      QMat g(h.n, b.n);
      for (int r = 0; r < x.n; ++r)
        for (int j = 0; j < a.n; ++j)
          for (int i = 0; i < b.n; ++i) g.at(r * a.n + j, i) = f.mat.at(r, i * a.n + j);
      return make_matq_morphism(b, h, std::move(g));
    }
    case BaseTag::suplat: {
      auto st = make_sup_tensor(b.lat, a.lat);
      auto maps = enumerate_join_maps(a.lat, x.lat);
      std::vector<int> g(size_t(b.n));
      for (int i = 0; i < b.n; ++i) {
        std::vector<int> t(size_t(a.n));
        for (int j = 0; j < a.n; ++j) t[size_t(j)] = f.table[size_t(st.pure(i, j))];
        auto it = std::lower_bound(maps.begin(), maps.end(), t);
        require(it != maps.end() && *it == t, "curried slice is not join-preserving");
        g[size_t(i)] = int(it - maps.begin());
      }
      return make_table_morphism(b, h, std::move(g));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism uncurry_right(const BaseObject& b, const BaseObject& a, const BaseObject& x,
                           const BaseMorphism& g) {
  BaseObject h = hom_obj(a, x);
  require(g.dom == b && g.cod == h, "uncurry_right argument has wrong endpoints");
  BaseObject dom = tensor_obj(b, a);
  switch (a.tag) {
    case BaseTag::finset: {
      std::vector<int> f(size_t(dom.n));
      for (int i = 0; i < b.n; ++i) {
        auto t = decode_map(a, x, g.table[size_t(i)]);
        for (int j = 0; j < a.n; ++j) f[size_t(i) * a.n + j] = t[size_t(j)];
      }
      return make_table_morphism(dom, x, std::move(f));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> f(size_t(dom.n), 0);
      for (int i = 1; i < b.n; ++i) {
        auto t = decode_map(a, x, g.table[size_t(i)]);
        for (int j = 1; j < a.n; ++j) f[size_t(smash_index(a.n, i, j))] = t[size_t(j)];
      }
      return make_table_morphism(dom, x, std::move(f));
    }
    case BaseTag::matq: {
      QMat f(x.n, dom.n);
      for (int r = 0; r < x.n; ++r)
        for (int j = 0; j < a.n; ++j)
          for (int i = 0; i < b.n; ++i) f.at(r, i * a.n + j) = g.mat.at(r * a.n + j, i);
      return make_matq_morphism(dom, x, std::move(f));
    }
    case BaseTag::suplat: {
      auto st = make_sup_tensor(b.lat, a.lat);
      auto maps = enumerate_join_maps(a.lat, x.lat);
      auto jt = join_table(x.lat);
      std::vector<int> f(st.carrier.size());
      for (size_t c = 0; c < st.carrier.size(); ++c)
        f[c] = fold_mask(st, st.carrier[c], x.lat, jt, [&](int i, int j) {
          return maps[size_t(g.table[size_t(i)])][size_t(j)];
        });
      return make_table_morphism(dom, x, std::move(f));
    }
  }
  throw CatError("unknown base tag");
}

BaseMorphism ev_left(const BaseObject& a, const BaseObject& x) {
  BaseObject h = hom_obj(a, x);
  return uncurry_left(a, h, x, identity(h));
}

BaseMorphism ev_right(const BaseObject& a, const BaseObject& x) {
  BaseObject h = hom_obj(a, x);
  return uncurry_right(h, a, x, identity(h));
}

BaseMorphism hom_left_pre(const BaseMorphism& w, const BaseObject& x) {
  BaseObject h = hom_obj(w.cod, x);
  BaseMorphism f = seq(tensor_mor(w, identity(h)), ev_left(w.cod, x));
  return curry_left(w.dom, h, f);
}

BaseMorphism hom_left_post(const BaseObject& a, const BaseMorphism& u) {
  BaseObject h = hom_obj(a, u.dom);
  return curry_left(a, h, seq(ev_left(a, u.dom), u));
}

BaseMorphism hom_right_pre(const BaseMorphism& w, const BaseObject& x) {
  BaseObject h = hom_obj(w.cod, x);
  BaseMorphism f = seq(tensor_mor(identity(h), w), ev_right(w.cod, x));
  return curry_right(h, w.dom, f);
}

BaseMorphism hom_right_post(const BaseObject& a, const BaseMorphism& u) {
  BaseObject h = hom_obj(a, u.dom);
  return curry_right(h, a, seq(ev_right(a, u.dom), u));
}

BaseMorphism distribute_sum_left(const std::vector<BaseObject>& parts, const BaseObject& m) {
  BaseTag tag = m.tag;
  auto cp = coproduct(tag, parts);
  std::vector<BaseObject> tens;
  for (const auto& p : parts) tens.push_back(tensor_obj(p, m));
  auto cp2 = coproduct(tag, tens);
  std::vector<BaseMorphism> fs;
  for (size_t b = 0; b < parts.size(); ++b)
    fs.push_back(tensor_mor(cp.injections[b], identity(m)));
  BaseMorphism back = from_coproduct(cp2, fs, tensor_obj(cp.obj, m));
  auto fwd = is_iso(back);
  require(fwd.has_value(), "sum does not distribute over tensor");
  return *fwd;
}

BaseMorphism distribute_sum_right(const BaseObject& m, const std::vector<BaseObject>& parts) {
  BaseTag tag = m.tag;
  auto cp = coproduct(tag, parts);
  std::vector<BaseObject> tens;
  for (const auto& p : parts) tens.push_back(tensor_obj(m, p));
  auto cp2 = coproduct(tag, tens);
  std::vector<BaseMorphism> fs;
  for (size_t b = 0; b < parts.size(); ++b)
    fs.push_back(tensor_mor(identity(m), cp.injections[b]));
  BaseMorphism back = from_coproduct(cp2, fs, tensor_obj(m, cp.obj));
  auto fwd = is_iso(back);
  require(fwd.has_value(), "sum does not distribute over tensor");
  return *fwd;
}

std::optional<BaseMorphism> is_iso(const BaseMorphism& f) {
  if (f.tag == BaseTag::matq) {
    auto inv = inverse(f.mat);
    if (!inv) return std::nullopt;
    return make_matq_morphism(f.cod, f.dom, std::move(*inv));
  }
  if (f.dom.n != f.cod.n) return std::nullopt;
  std::vector<int> inv(size_t(f.cod.n), -1);
  for (int i = 0; i < f.dom.n; ++i) {
    if (inv[size_t(f.table[i])] >= 0) return std::nullopt;
    inv[size_t(f.table[i])] = i;
  }
  for (int v : inv)
    if (v < 0) return std::nullopt;
  // a bijective join map has a join-preserving inverse, so validation passes
  return make_table_morphism(f.cod, f.dom, std::move(inv));
}

}  // namespace absolim
