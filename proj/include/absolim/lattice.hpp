#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace absolim {

// Finite sup-lattice carrier: elements 0..n-1, leq[x*n+y] <=> x <= y.
// Invariant after validation: reflexive, antisymmetric, transitive, every
// pair has a join, element 0 is the bottom.
struct Lat {
  int n = 0;
  std::vector<uint8_t> leq;

  bool le(int x, int y) const { return leq[size_t(x) * n + y] != 0; }
  bool operator==(const Lat& o) const { return n == o.n && leq == o.leq; }
};

// Empty string when valid; otherwise a description of the first failure.
// Requires bottom at index 0 (callers reindex first if needed).
std::string validate_lattice(const Lat& l);

// Permutation moving the least element to index 0, stable on the rest;
// empty when no unique bottom exists.
std::vector<int> bottom_first_permutation(const Lat& l);
Lat apply_permutation(const Lat& l, const std::vector<int>& perm);

// join_table[x*n+y] = x v y (valid lattices only).
std::vector<int> join_table(const Lat& l);

int join_of_list(const Lat& l, const std::vector<int>& jt, const std::vector<int>& xs);

// x is join-irreducible iff x != join of { y : y < x }.
std::vector<int> join_irreducibles(const Lat& l);

bool is_join_map(const Lat& a, const Lat& b, const std::vector<int>& table);

// All join-and-bottom-preserving tables a -> b, lexicographically ascending.
std::vector<std::vector<int>> enumerate_join_maps(const Lat& a, const Lat& b);

// All down-sets (as bitmasks over the given order relation), ascending.
// n must be <= 64; counts beyond the cap indicate an out-of-scope instance.
std::vector<uint64_t> enumerate_downsets(int n, const std::vector<uint8_t>& leq);

// Quotient of l by the sup-lattice congruence generated by the given pairs,
// computed as the least closure operator identifying them. carrier lists the
// closed elements (class maxima) with the bottom class first, then ascending;
// proj maps each element to the index of its class.
struct ClosureQuot {
  std::vector<int> carrier;
  std::vector<int> proj;
};
ClosureQuot closure_quotient(const Lat& l, const std::vector<std::pair<int, int>>& gens);
Lat quotient_lattice(const Lat& l, const ClosureQuot& q);

// Independent certification path: counts maps a x b -> c that preserve joins
// and bottom in each variable separately, by direct enumeration over
// join-irreducible generators. Never touches the tensor construction.
long count_bimorphisms(const Lat& a, const Lat& b, const Lat& c, bool parallel);

}  // namespace absolim
