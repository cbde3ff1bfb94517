#include "orbitgr/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace orbitgr {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit(int n, int i, int j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

QMatrix QMatrix::scaled(const Rational& c) const {
  QMatrix r = *this;
  for (Rational& v : r.data_) v *= c;
  return r;
}

QMatrix QMatrix::transposed() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const Rational& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool QMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

int QMatrix::rank(Execution execution) const {
  QMatrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (!m(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
    const Rational inv = Rational(1) / m(rank, col);
    for (int j = col; j < cols_; ++j) m(rank, j) *= inv;
    const int pivot_row = rank;
    auto eliminate = [&](int i) {
      const Rational f = m(i, col);
      if (f.is_zero()) return;
      for (int j = col; j < cols_; ++j) {
        const Rational& p = m(pivot_row, j);
        if (!p.is_zero()) m(i, j) -= f * p;
      }
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
      for (int i = pivot_row + 1; i < rows_; ++i) eliminate(i);
    } else {
      for (int i = pivot_row + 1; i < rows_; ++i) eliminate(i);
    }
    ++rank;
  }
  return rank;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of a non-square matrix");
  const int n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!a(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("QMatrix: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(pivot, j), a(col, j));
      std::swap(inv(pivot, j), inv(col, j));
    }
    const Rational s = Rational(1) / a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Rational f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string QMatrix::str() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += (*this)(i, j).str();
    }
    s += '\n';
  }
  return s;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

}  // namespace orbitgr
