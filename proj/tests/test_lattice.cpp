#include "doctest.h"

#include <algorithm>

#include "absolim/lattice.hpp"

using namespace absolim;

namespace {

Lat chain(int n) {
  Lat l;
  l.n = n;
  l.leq.assign(size_t(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) l.leq[size_t(x) * n + y] = 1;
  return l;
}

// 0 < {1, 2} < 3 with 1, 2 incomparable
Lat diamond() {
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

}  // namespace

TEST_CASE("lattice validation") {
  CHECK(validate_lattice(chain(1)).empty());
  CHECK(validate_lattice(chain(4)).empty());
  CHECK(validate_lattice(diamond()).empty());

  // two minimal elements: no bottom
  Lat anti;
  anti.n = 2;
  anti.leq = {1, 0, 0, 1};
  CHECK(!validate_lattice(anti).empty());

  // 2-antichain plus bottom: no join
  Lat vee;
  vee.n = 3;
  vee.leq = {1, 1, 1, 0, 1, 0, 0, 0, 1};
  CHECK(!validate_lattice(vee).empty());

  Lat notrans;
  notrans.n = 3;
  notrans.leq = {1, 1, 0, 0, 1, 1, 0, 0, 1};
  CHECK(!validate_lattice(notrans).empty());
}

TEST_CASE("bottom reindexing") {
  // 3-chain listed with the bottom in the middle: 1 < 0 < 2
  Lat l;
  l.n = 3;
  l.leq = {1, 0, 1, 1, 1, 1, 0, 0, 1};
  auto perm = bottom_first_permutation(l);
  REQUIRE(perm.size() == 3);
  CHECK(perm == std::vector<int>{1, 0, 2});
  Lat r = apply_permutation(l, perm);
  CHECK(validate_lattice(r).empty());
  CHECK(r == chain(3));
}

TEST_CASE("joins and irreducibles") {
  auto d = diamond();
  auto jt = join_table(d);
  CHECK(jt[1 * 4 + 2] == 3);
  CHECK(jt[1 * 4 + 1] == 1);
  CHECK(jt[0 * 4 + 2] == 2);
  CHECK(join_of_list(d, jt, {}) == 0);
  CHECK(join_of_list(d, jt, {1, 2}) == 3);

  CHECK(join_irreducibles(d) == std::vector<int>{1, 2});
  CHECK(join_irreducibles(chain(4)) == std::vector<int>{1, 2, 3});
  CHECK(join_irreducibles(chain(1)).empty());
}

TEST_CASE("down-set enumeration") {
  // 2-antichain
  std::vector<uint8_t> leq = {1, 0, 0, 1};
  auto ds = enumerate_downsets(2, leq);
  CHECK(ds == std::vector<uint64_t>{0, 1, 2, 3});

  // 3x3 grid poset has C(6,3) = 20 down-sets
  auto c3 = chain(3);
  std::vector<uint8_t> grid(81, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 3; ++j2)
          grid[size_t(i * 3 + j) * 9 + (i2 * 3 + j2)] =
              (c3.le(i, i2) && c3.le(j, j2)) ? 1 : 0;
  CHECK(enumerate_downsets(9, grid).size() == 20);
}

TEST_CASE("closure quotient of a chain collapse") {
  auto c3 = chain(3);
  auto q = closure_quotient(c3, {{1, 2}});
  CHECK(q.carrier == std::vector<int>{0, 2});
  CHECK(q.proj == std::vector<int>{0, 1, 1});
  Lat two = quotient_lattice(c3, q);
  CHECK(two == chain(2));

  // collapsing an atom of the diamond into the bottom drags the rest down
  auto q2 = closure_quotient(diamond(), {{0, 1}});
  CHECK(q2.carrier == std::vector<int>{1, 3});
  CHECK(q2.proj == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("join map enumeration") {
  auto maps22 = enumerate_join_maps(chain(2), chain(2));
  CHECK(maps22 == std::vector<std::vector<int>>{{0, 0}, {0, 1}});

  // maps out of the diamond are free on the two atoms
  auto mapsd2 = enumerate_join_maps(diamond(), chain(2));
  CHECK(mapsd2.size() == 4);
  for (const auto& t : mapsd2) CHECK(is_join_map(diamond(), chain(2), t));
  CHECK(std::is_sorted(mapsd2.begin(), mapsd2.end()));

  // into a chain from a chain: monotone with f(0)=0
  CHECK(enumerate_join_maps(chain(3), chain(3)).size() == 6);
  CHECK(enumerate_join_maps(chain(1), diamond()).size() == 1);
}

TEST_CASE("bimorphism counts, serial and parallel agree") {
  auto c2 = chain(2);
  auto d = diamond();
  CHECK(count_bimorphisms(c2, c2, c2, false) == 2);
  CHECK(count_bimorphisms(c2, c2, d, false) == 4);
  CHECK(count_bimorphisms(chain(1), d, d, false) == 1);
  for (const Lat& a : {c2, chain(3), d})
    for (const Lat& b : {c2, chain(3), d})
      CHECK(count_bimorphisms(a, b, d, false) == count_bimorphisms(a, b, d, true));
}
