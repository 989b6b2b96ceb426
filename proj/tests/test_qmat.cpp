#include "doctest.h"

#include "absolim/qmat.hpp"
#include "absolim/rational.hpp"

using namespace absolim;

namespace {

QMat from_rows(int rows, int cols, std::initializer_list<int> vals) {
  QMat m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = *it++;
  return m;
}

}  // namespace

TEST_CASE("rational strings render and parse canonically") {
  CHECK(rat_to_string(Rat(1, 2)) == "1/2");
  CHECK(rat_to_string(Rat(-3)) == "-3");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("7/3") == Rat(7, 3));
  CHECK(rat_from_string("-7/3") == Rat(-7, 3));
  CHECK(rat_from_string("0") == Rat(0));
  CHECK_THROWS(rat_from_string("2/4"));
  CHECK_THROWS(rat_from_string("+1"));
  CHECK_THROWS(rat_from_string("1/-2"));
  CHECK_THROWS(rat_from_string("-0"));
  CHECK_THROWS(rat_from_string("01"));
  CHECK_THROWS(rat_from_string("1/0"));
  CHECK_THROWS(rat_from_string(""));
}

TEST_CASE("rref and rank") {
  QMat m = from_rows(2, 2, {2, 4, 1, 2});
  CHECK(rank(m) == 1);
  rref_in_place(m);
  CHECK(m == from_rows(2, 2, {1, 2, 0, 0}));
  CHECK(rank(QMat::identity(3)) == 3);
  CHECK(rank(QMat(3, 2)) == 0);
}

TEST_CASE("kernel basis is canonical") {
  // x0 = x1 line: free column 1 carries a 1
  QMat d = from_rows(1, 2, {1, -1});
  QMat k = kernel_basis(d);
  CHECK(k == from_rows(2, 1, {1, 1}));

  QMat full = QMat::identity(2);
  CHECK(kernel_basis(full).cols() == 0);

  QMat wide = from_rows(1, 3, {1, 2, 3});
  QMat kw = kernel_basis(wide);
  CHECK(kw == from_rows(3, 2, {-2, -3, 1, 0, 0, 1}));
  CHECK((wide * kw).is_zero());
}

TEST_CASE("cokernel projection kills the column space") {
  QMat d = from_rows(2, 1, {1, -1});
  QMat p = cokernel_projection(d);
  CHECK(p == from_rows(1, 2, {1, 1}));
  CHECK((p * d).is_zero());

  QMat id = QMat::identity(2);
  CHECK(cokernel_projection(id).rows() == 0);

  QMat z(3, 1);
  CHECK(cokernel_projection(z) == QMat::identity(3));
}

TEST_CASE("solve and inverse") {
  QMat a = from_rows(2, 2, {1, 1, 0, 1});
  QMat b = from_rows(2, 1, {3, 1});
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK(*x == from_rows(2, 1, {2, 1}));

  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(*inv == from_rows(2, 2, {1, -1, 0, 1}));
  CHECK(!inverse(from_rows(2, 2, {1, 2, 2, 4})).has_value());

  // inconsistent system
  QMat bad = from_rows(2, 1, {1, 0});
  CHECK(!solve(from_rows(2, 1, {1, 1}), bad).has_value());
}

TEST_CASE("kron matches the row-major pairing") {
  QMat a = from_rows(2, 2, {1, 2, 3, 4});
  QMat b = from_rows(1, 2, {5, 7});
  QMat k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 1; ++j)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
          CHECK(k.at(i * 1 + j, s * 2 + t) == a.at(i, s) * b.at(j, t));
}

TEST_CASE("stacking") {
  QMat a = from_rows(1, 2, {1, 2});
  QMat b = from_rows(1, 2, {3, 4});
  CHECK(vstack(a, b) == from_rows(2, 2, {1, 2, 3, 4}));
  CHECK(hstack(a, b) == from_rows(1, 4, {1, 2, 3, 4}));
}
