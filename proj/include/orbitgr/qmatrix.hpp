#pragma once

#include <string>
#include <vector>

#include "orbitgr/rational.hpp"

namespace orbitgr {

/// Selects the serial reference loop or the OpenMP kernel for data-parallel routines.
enum class Execution { Serial, Parallel };

/// Dense matrix over the rationals, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static QMatrix identity(int n);
  /// Matrix unit E_{ij}.
  static QMatrix unit(int n, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix scaled(const Rational& c) const;
  QMatrix transposed() const;

  bool is_zero() const;
  bool is_diagonal() const;
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  /// Exact rank by Gaussian elimination; the row updates below each pivot run
  /// through an OpenMP loop when execution is Parallel.
  int rank(Execution execution = Execution::Serial) const;
  /// Inverse of a square matrix; throws std::domain_error when singular.
  QMatrix inverse() const;

  /// Exact rational grid, one row per line.
  std::string str() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// [a, b] = ab - ba.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

}  // namespace orbitgr
