#pragma once

#include <random>
#include <vector>

#include "absolim/base.hpp"

namespace absolim::testgen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Lat chain(int n) {
  Lat l;
  l.n = n;
  l.leq.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) l.leq[size_t(x) * n + y] = 1;
  return l;
}

inline Lat diamond() {
  Lat l;
  l.n = 4;
  l.leq.assign(16, 0);
  auto set = [&](int x, int y) { l.leq[size_t(x) * 4 + y] = 1; };
  for (int x = 0; x < 4; ++x) set(x, x);
  set(0, 1);
  set(0, 2);
  set(0, 3);
  set(1, 3);
  set(2, 3);
  return l;
}

// Lattices with at most 4 elements, one per isomorphism class.
inline std::vector<Lat> catalog_le4() {
  return {chain(1), chain(2), chain(3), chain(4), diamond()};
}

inline BaseObject random_object(Rng& rng, BaseTag tag, int max_size) {
  switch (tag) {
    case BaseTag::finset: return finset_obj(pick(rng, 0, max_size));
    case BaseTag::finset_ptd: return finset_ptd_obj(pick(rng, 1, max_size));
    case BaseTag::matq: return matq_obj(pick(rng, 0, max_size > 3 ? 3 : max_size));
    case BaseTag::suplat: {
      auto cat = catalog_le4();
      int i = pick(rng, 0, int(cat.size()) - 1);
      if (cat[size_t(i)].n > max_size) i = pick(rng, 0, 1);
      return suplat_obj(cat[size_t(i)]);
    }
  }
  throw CatError("unknown base tag");
}

// Tuples for nested-tensor sweeps. Sup-lattice sizes are capped so iterated
// tensor carriers stay within the 64-generator bound: at most two factors of
// size 3+, and a size-4 factor only with 2-element companions.
inline std::vector<BaseObject> random_tuple(Rng& rng, BaseTag tag, int k) {
  std::vector<BaseObject> out;
  if (tag != BaseTag::suplat) {
    for (int i = 0; i < k; ++i) out.push_back(random_object(rng, tag, tag == BaseTag::matq ? 2 : 3));
    return out;
  }
  std::vector<int> sizes(size_t(k), 0);
  int big = 0;
  bool huge = false;
  for (int i = 0; i < k; ++i) {
    int s = pick(rng, 1, 4);
    if (s == 4 && (huge || big > 0 || k > 3)) s = 2;
    if (s == 3 && big >= 2) s = 2;
    if (s >= 3) ++big;
    if (s == 4) huge = true;
    if (huge) big = 2;
    sizes[size_t(i)] = s;
  }
  auto cat = catalog_le4();
  for (int i = 0; i < k; ++i) {
    if (sizes[size_t(i)] == 4)
      out.push_back(suplat_obj(pick(rng, 0, 1) ? cat[3] : cat[4]));
    else
      out.push_back(suplat_obj(cat[size_t(sizes[size_t(i)] - 1)]));
  }
  return out;
}

inline BaseMorphism random_morphism(Rng& rng, const BaseObject& dom, const BaseObject& cod) {
  switch (dom.tag) {
    case BaseTag::finset: {
      if (dom.n > 0 && cod.n == 0) throw CatError("no maps into the empty set");
      std::vector<int> t(size_t(dom.n));
      for (auto& v : t) v = pick(rng, 0, cod.n - 1);
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::finset_ptd: {
      std::vector<int> t(size_t(dom.n), 0);
      for (int i = 1; i < dom.n; ++i) t[size_t(i)] = pick(rng, 0, cod.n - 1);
      return make_table_morphism(dom, cod, std::move(t));
    }
    case BaseTag::matq: {
      QMat m(cod.n, dom.n);
      for (int r = 0; r < cod.n; ++r)
        for (int c = 0; c < dom.n; ++c) {
          Rat v(pick(rng, -2, 2), pick(rng, 1, 2));
          v.canonicalize();
          m.at(r, c) = v;
        }
      return make_matq_morphism(dom, cod, std::move(m));
    }
    case BaseTag::suplat: {
      int k = hom_size(dom, cod);
      return hom_element(dom, cod, pick(rng, 0, k - 1));
    }
  }
  throw CatError("unknown base tag");
}

inline std::vector<BaseTag> all_tags() {
  return {BaseTag::finset, BaseTag::finset_ptd, BaseTag::matq, BaseTag::suplat};
}

}  // namespace absolim::testgen
