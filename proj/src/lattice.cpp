#include "absolim/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absolim {

std::string validate_lattice(const Lat& l) {
  const int n = l.n;
  if (n <= 0) return "lattice must have at least one element";
  if (l.leq.size() != size_t(n) * n) return "leq table has wrong size";
  for (int x = 0; x < n; ++x)
    if (!l.le(x, x)) return "order not reflexive at " + std::to_string(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && l.le(x, y) && l.le(y, x))
        return "order not antisymmetric at " + std::to_string(x) + "," + std::to_string(y);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (l.le(x, y))
        for (int z = 0; z < n; ++z)
          if (l.le(y, z) && !l.le(x, z))
            return "order not transitive at " + std::to_string(x) + "," + std::to_string(y) +
                   "," + std::to_string(z);
  for (int x = 0; x < n; ++x)
    if (!l.le(0, x)) return "element 0 is not the bottom";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      // least upper bound must exist
      int best = -1;
      for (int u = 0; u < n; ++u)
        if (l.le(x, u) && l.le(y, u) && (best < 0 || l.le(u, best))) best = u;
      if (best < 0)
        return "no upper bound for " + std::to_string(x) + "," + std::to_string(y);
      for (int u = 0; u < n; ++u)
        if (l.le(x, u) && l.le(y, u) && !l.le(best, u))
          return "no least upper bound for " + std::to_string(x) + "," + std::to_string(y);
    }
  return {};
}

std::vector<int> bottom_first_permutation(const Lat& l) {
  int bot = -1;
  for (int c = 0; c < l.n; ++c) {
    bool least = true;
    for (int x = 0; x < l.n; ++x)
      if (!l.le(c, x)) { least = false; break; }
    if (least) { bot = c; break; }
  }
  if (bot < 0) return {};
  std::vector<int> perm;  // perm[new] = old
  perm.push_back(bot);
  for (int x = 0; x < l.n; ++x)
    if (x != bot) perm.push_back(x);
  return perm;
}

Lat apply_permutation(const Lat& l, const std::vector<int>& perm) {
  Lat r;
  r.n = l.n;
  r.leq.assign(size_t(l.n) * l.n, 0);
  for (int x = 0; x < l.n; ++x)
    for (int y = 0; y < l.n; ++y)
      r.leq[size_t(x) * l.n + y] = l.le(perm[x], perm[y]) ? 1 : 0;
  return r;
}

std::vector<int> join_table(const Lat& l) {
  const int n = l.n;
  std::vector<int> jt(size_t(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int best = -1;
      for (int u = 0; u < n; ++u)
        if (l.le(x, u) && l.le(y, u) && (best < 0 || l.le(u, best))) best = u;
      jt[size_t(x) * n + y] = best;
    }
  return jt;
}

int join_of_list(const Lat& l, const std::vector<int>& jt, const std::vector<int>& xs) {
  int acc = 0;
  for (int x : xs) acc = jt[size_t(acc) * l.n + x];
  return acc;
}

std::vector<int> join_irreducibles(const Lat& l) {
  auto jt = join_table(l);
  std::vector<int> irr;
  for (int x = 1; x < l.n; ++x) {
    int acc = 0;
    for (int y = 0; y < l.n; ++y)
      if (y != x && l.le(y, x)) acc = jt[size_t(acc) * l.n + y];
    if (acc != x) irr.push_back(x);
  }
  return irr;
}

bool is_join_map(const Lat& a, const Lat& b, const std::vector<int>& table) {
  if (table.size() != size_t(a.n)) return false;
  for (int v : table)
    if (v < 0 || v >= b.n) return false;
  if (table[0] != 0) return false;
  auto ja = join_table(a);
  auto jb = join_table(b);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (table[ja[size_t(x) * a.n + y]] != jb[size_t(table[x]) * b.n + table[y]])
        return false;
  return true;
}

namespace {

// Extends an assignment on join-irreducibles to the whole lattice by
// f(x) = join of g over irreducibles below x. Every join map arises this way.
std::vector<int> extend_from_irreducibles(const Lat& a, const Lat& b,
                                          const std::vector<int>& jb,
                                          const std::vector<int>& irr,
                                          const std::vector<int>& g) {
  std::vector<int> f(a.n, 0);
  for (int x = 0; x < a.n; ++x) {
    int acc = 0;
    for (size_t k = 0; k < irr.size(); ++k)
      if (a.le(irr[k], x)) acc = jb[size_t(acc) * b.n + g[k]];
    f[x] = acc;
  }
  return f;
}

void enumerate_monotone(const Lat& a, const Lat& b, const std::vector<int>& irr,
                        size_t k, std::vector<int>& g,
                        std::vector<std::vector<int>>& out) {
  if (k == irr.size()) {
    out.push_back(g);
    return;
  }
  for (int v = 0; v < b.n; ++v) {
    bool ok = true;
    for (size_t j = 0; j < k; ++j) {
      if (a.le(irr[j], irr[k]) && !b.le(g[j], v)) { ok = false; break; }
      if (a.le(irr[k], irr[j]) && !b.le(v, g[j])) { ok = false; break; }
    }
    if (!ok) continue;
    g[k] = v;
    enumerate_monotone(a, b, irr, k + 1, g, out);
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_join_maps(const Lat& a, const Lat& b) {
  auto irr = join_irreducibles(a);
  auto jb = join_table(b);
  std::vector<std::vector<int>> assigns;
  std::vector<int> g(irr.size(), 0);
  enumerate_monotone(a, b, irr, 0, g, assigns);
  std::set<std::vector<int>> found;
  for (const auto& gg : assigns) {
    auto f = extend_from_irreducibles(a, b, jb, irr, gg);
    if (is_join_map(a, b, f)) found.insert(std::move(f));
  }
  return {found.begin(), found.end()};
}

std::vector<uint64_t> enumerate_downsets(int n, const std::vector<uint8_t>& leq) {
  if (n < 0 || n > 64) throw std::invalid_argument("downset enumeration supports at most 64 elements");
  if (leq.size() != size_t(n) * n) throw std::invalid_argument("leq table has wrong size");
  // Linear extension: stable sort by number of strict predecessors.
  std::vector<int> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::vector<int> npred(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (y != x && leq[size_t(y) * n + x]) ++npred[x];
  std::stable_sort(ext.begin(), ext.end(), [&](int u, int v) { return npred[u] < npred[v]; });

  std::vector<uint64_t> below(n, 0);  // strict predecessors as bitmask
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (y != x && leq[size_t(y) * n + x]) below[x] |= (uint64_t(1) << y);

  std::vector<uint64_t> out;
  std::vector<std::pair<int, uint64_t>> stack;
  stack.emplace_back(0, 0);
  while (!stack.empty()) {
    auto [i, mask] = stack.back();
    stack.pop_back();
    if (i == n) {
      out.push_back(mask);
      continue;
    }
    int e = ext[i];
    stack.emplace_back(i + 1, mask);
    if ((below[e] & ~mask) == 0) stack.emplace_back(i + 1, mask | (uint64_t(1) << e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClosureQuot closure_quotient(const Lat& l, const std::vector<std::pair<int, int>>& gens) {
  const int n = l.n;
  auto jt = join_table(l);
  // Identifying u with v forces both up to u v v; the least closure operator
  // is the fixpoint of "if s <= w then w := w v t" over these rules.
  std::vector<std::pair<int, int>> rules;
  for (auto [u, v] : gens) {
    int t = jt[size_t(u) * n + v];
    if (u != t) rules.emplace_back(u, t);
    if (v != t) rules.emplace_back(v, t);
  }
  std::vector<int> cl(n);
  for (int z = 0; z < n; ++z) {
    int w = z;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [s, t] : rules)
        if (l.le(s, w) && !l.le(t, w)) {
          w = jt[size_t(w) * n + t];
          changed = true;
        }
    }
    cl[z] = w;
  }
  ClosureQuot q;
  q.proj.assign(n, -1);
  q.carrier.push_back(cl[0]);
  for (int z = 0; z < n; ++z)
    if (cl[z] == z && z != cl[0]) q.carrier.push_back(z);
  for (int z = 0; z < n; ++z) {
    auto it = std::find(q.carrier.begin(), q.carrier.end(), cl[z]);
    q.proj[z] = int(it - q.carrier.begin());
  }
  return q;
}

Lat quotient_lattice(const Lat& l, const ClosureQuot& q) {
  // On closed representatives the quotient order is the restriction.
  const int m = int(q.carrier.size());
  Lat r;
  r.n = m;
  r.leq.assign(size_t(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      r.leq[size_t(i) * m + j] = l.le(q.carrier[i], q.carrier[j]) ? 1 : 0;
  return r;
}

namespace {

void enumerate_monotone_grid(const Lat& a, const Lat& b, const Lat& c,
                             const std::vector<int>& ia, const std::vector<int>& ib,
                             size_t k, std::vector<int>& g,
                             std::vector<std::vector<int>>& out) {
  if (k == ia.size() * ib.size()) {
    out.push_back(g);
    return;
  }
  size_t p = k / ib.size(), q = k % ib.size();
  for (int v = 0; v < c.n; ++v) {
    bool ok = true;
    for (size_t j = 0; j < k && ok; ++j) {
      size_t pj = j / ib.size(), qj = j % ib.size();
      bool le_pq = a.le(ia[pj], ia[p]) && b.le(ib[qj], ib[q]);
      bool ge_pq = a.le(ia[p], ia[pj]) && b.le(ib[q], ib[qj]);
      if (le_pq && !c.le(g[j], v)) ok = false;
      if (ge_pq && !c.le(v, g[j])) ok = false;
    }
    if (!ok) continue;
    g[k] = v;
    enumerate_monotone_grid(a, b, c, ia, ib, k + 1, g, out);
  }
}

bool check_bimorphism(const Lat& a, const Lat& b, const Lat& c,
                      const std::vector<int>& ja, const std::vector<int>& jb,
                      const std::vector<int>& jc, const std::vector<int>& f) {
  for (int y = 0; y < b.n; ++y) {
    if (f[size_t(0) * b.n + y] != 0) return false;
    for (int x = 0; x < a.n; ++x)
      for (int x2 = 0; x2 < a.n; ++x2) {
        int lhs = f[size_t(ja[size_t(x) * a.n + x2]) * b.n + y];
        int rhs = jc[size_t(f[size_t(x) * b.n + y]) * c.n + f[size_t(x2) * b.n + y]];
        if (lhs != rhs) return false;
      }
  }
  for (int x = 0; x < a.n; ++x) {
    if (f[size_t(x) * b.n + 0] != 0) return false;
    for (int y = 0; y < b.n; ++y)
      for (int y2 = 0; y2 < b.n; ++y2) {
        int lhs = f[size_t(x) * b.n + jb[size_t(y) * b.n + y2]];
        int rhs = jc[size_t(f[size_t(x) * b.n + y]) * c.n + f[size_t(x) * b.n + y2]];
        if (lhs != rhs) return false;
      }
  }
  return true;
}

}  // namespace

long count_bimorphisms(const Lat& a, const Lat& b, const Lat& c, bool parallel) {
  auto ia = join_irreducibles(a);
  auto ib = join_irreducibles(b);
  auto ja = join_table(a);
  auto jb = join_table(b);
  auto jc = join_table(c);

  std::vector<std::vector<int>> assigns;
  std::vector<int> g(ia.size() * ib.size(), 0);
  enumerate_monotone_grid(a, b, c, ia, ib, 0, g, assigns);

  auto extend_and_check = [&](const std::vector<int>& gg,
                              std::set<std::vector<int>>& sink) {
    std::vector<int> f(size_t(a.n) * b.n, 0);
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < b.n; ++y) {
        int acc = 0;
        for (size_t p = 0; p < ia.size(); ++p)
          for (size_t q = 0; q < ib.size(); ++q)
            if (a.le(ia[p], x) && b.le(ib[q], y))
              acc = jc[size_t(acc) * c.n + gg[p * ib.size() + q]];
        f[size_t(x) * b.n + y] = acc;
      }
    if (check_bimorphism(a, b, c, ja, jb, jc, f)) sink.insert(std::move(f));
  };

  std::set<std::vector<int>> found;
  if (parallel) {
#ifdef _OPENMP
    int nt = omp_get_max_threads();
    std::vector<std::set<std::vector<int>>> local(nt);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(assigns.size()); ++i)
      extend_and_check(assigns[size_t(i)], local[omp_get_thread_num()]);
    for (auto& s : local) found.merge(s);
#else
    for (const auto& gg : assigns) extend_and_check(gg, found);
#endif
  } else {
    for (const auto& gg : assigns) extend_and_check(gg, found);
  }
  return long(found.size());
}

}  // namespace absolim
