#pragma once

#include <initializer_list>
#include <vector>

#include "heis/rational.hpp"

namespace heis {

using QVec = std::vector<Rat>;

/// Dense matrix of exact rationals, row-major. The universal carrier for
/// algebra elements, group generators and subspace bases.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  // Row-major literal, e.g. QMat(2, 2, {1, 2, 3, 4}).
  QMat(int rows, int cols, std::initializer_list<long> entries);

  static QMat identity(int n);
  static QMat zero(int rows, int cols) { return QMat(rows, cols); }
  // E_ij: single 1 at (i, j), zero-based.
  static QMat unit(int dim, int i, int j);
  static QMat from_rows(const std::vector<QVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

  const QVec& entries() const { return e_; }

  bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const QMat& o) const { return !(*this == o); }

  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat operator*(const QMat& o) const;
  QMat operator-() const;
  QMat scaled(const Rat& s) const;
  QMat transposed() const;

  QVec apply(const QVec& v) const;  // matrix * column vector
  QVec row(int i) const;
  QVec col(int j) const;

  Rat trace() const;
  bool is_zero() const;
  bool is_strictly_upper_triangular() const;

  QVec flatten() const { return e_; }
  static QMat unflatten(int rows, int cols, const QVec& entries);

 private:
  int rows_, cols_;
  QVec e_;
};

QMat commutator(const QMat& a, const QMat& b);  // ab - ba

// v1 + s*v2 etc.; small exact-vector helpers shared across modules.
QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scaled(const QVec& a, const Rat& s);
bool vec_is_zero(const QVec& a);
// True if a = s*b for some nonzero scalar s (both nonzero), or both zero.
bool vec_proportional(const QVec& a, const QVec& b);

}  // namespace heis
