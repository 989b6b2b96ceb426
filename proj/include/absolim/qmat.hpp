#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "absolim/rational.hpp"

namespace absolim {

// Dense exact-rational matrix, row-major. Sizes here are tiny (fixture
// scale), so clarity of the canonical-form algorithms wins over speed.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat transpose() const;
  bool is_zero() const;

  // Kronecker product; block (i,j) of the result is at(i,j) * other.
  QMat kron(const QMat& o) const;

  static QMat hstack(const QMat& l, const QMat& r);
  static QMat vstack(const QMat& t, const QMat& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref_in_place(QMat& m);

int rank(QMat m);

// Canonical null-space basis as columns: one column per free variable of the
// RREF, in ascending free-column order, with a 1 in the free position.
QMat kernel_basis(const QMat& m);

// Canonical cokernel projection p with p*m = 0, rows indexed by the non-pivot
// coordinates of the column space (RREF of m^T).
QMat cokernel_projection(const QMat& m);

// Solves a*x = b exactly; nullopt when inconsistent. When a has full column
// rank the solution is unique; otherwise free variables are set to 0 (callers
// here only use it in the full-column-rank case).
std::optional<QMat> solve(const QMat& a, const QMat& b);

std::optional<QMat> inverse(const QMat& m);

inline QMat kron(const QMat& a, const QMat& b) { return a.kron(b); }
inline QMat hstack(const QMat& l, const QMat& r) { return QMat::hstack(l, r); }
inline QMat vstack(const QMat& t, const QMat& b) { return QMat::vstack(t, b); }

}  // namespace absolim
