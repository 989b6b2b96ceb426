#include "absolim/qmat.hpp"

#include <cassert>
#include <stdexcept>

namespace absolim {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat: size mismatch in product");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: size mismatch in sum");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat: size mismatch in difference");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::transpose() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

QMat QMat::kron(const QMat& o) const {
  QMat r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x == 0) continue;
      for (int p = 0; p < o.rows_; ++p)
        for (int q = 0; q < o.cols_; ++q)
          r.at(i * o.rows_ + p, j * o.cols_ + q) = x * o.at(p, q);
    }
  return r;
}

QMat QMat::hstack(const QMat& l, const QMat& r) {
  if (l.rows() != r.rows()) throw std::invalid_argument("QMat: hstack row mismatch");
  QMat m(l.rows(), l.cols() + r.cols());
  for (int i = 0; i < l.rows(); ++i) {
    for (int j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
    for (int j = 0; j < r.cols(); ++j) m.at(i, l.cols() + j) = r.at(i, j);
  }
  return m;
}

QMat QMat::vstack(const QMat& t, const QMat& b) {
  if (t.cols() != b.cols()) throw std::invalid_argument("QMat: vstack col mismatch");
  QMat m(t.rows() + b.rows(), t.cols());
  for (int i = 0; i < t.rows(); ++i)
    for (int j = 0; j < t.cols(); ++j) m.at(i, j) = t.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(t.rows() + i, j) = b.at(i, j);
  return m;
}

std::vector<int> rref_in_place(QMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rat inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMat m) { return int(rref_in_place(m).size()); }

QMat kernel_basis(const QMat& m) {
  QMat r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  QMat k(m.cols(), int(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(f, int(fi)) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], int(fi)) = -r.at(int(pi), f);
  }
  return k;
}

QMat cokernel_projection(const QMat& m) {
  // Row space of m^T = column space of m; quotient coordinates are the
  // non-pivot positions after reducing against that space.
  QMat t = m.transpose();
  std::vector<int> pivots = rref_in_place(t);
  std::vector<bool> is_pivot(m.rows(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_rows;
  for (int j = 0; j < m.rows(); ++j)
    if (!is_pivot[j]) free_rows.push_back(j);
  QMat p(int(free_rows.size()), m.rows());
  for (size_t fi = 0; fi < free_rows.size(); ++fi) {
    int c = free_rows[fi];
    p.at(int(fi), c) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi) p.at(int(fi), pivots[pi]) = -t.at(int(pi), c);
  }
  return p;
}

std::optional<QMat> solve(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("QMat: solve size mismatch");
  QMat aug = QMat::hstack(a, b);
  std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;  // pivot in the rhs block: inconsistent
  QMat x(a.cols(), b.cols());
  for (size_t pi = 0; pi < pivots.size(); ++pi)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[pi], j) = aug.at(int(pi), a.cols() + j);
  return x;
}

std::optional<QMat> inverse(const QMat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::optional<QMat> x = solve(m, QMat::identity(m.rows()));
  if (!x) return std::nullopt;
  if (!(m * *x == QMat::identity(m.rows()))) return std::nullopt;  // rank deficient
  return x;
}

}  // namespace absolim
