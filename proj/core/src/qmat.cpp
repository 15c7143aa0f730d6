#include "heis/qmat.hpp"

namespace heis {

QMat::QMat(int rows, int cols, std::initializer_list<long> entries) : QMat(rows, cols) {
  if (static_cast<std::size_t>(rows) * cols != entries.size())
    throw std::invalid_argument("literal entry count does not match shape");
  std::size_t idx = 0;
  for (long v : entries) e_[idx++] = Rat(v);
}

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::unit(int dim, int i, int j) {
  QMat m(dim, dim);
  m.at(i, j) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMat(0, 0);
  QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

QMat QMat::operator-() const { return scaled(Rat(-1)); }

QMat QMat::scaled(const Rat& s) const {
  QMat r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

QMat QMat::transposed() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch in apply");
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

QVec QMat::row(int i) const {
  QVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QVec QMat::col(int j) const {
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

Rat QMat::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rat t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool QMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool QMat::is_strictly_upper_triangular() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j <= i; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

QMat QMat::unflatten(int rows, int cols, const QVec& entries) {
  if (entries.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("unflatten: entry count does not match shape");
  QMat m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.e_[i] = entries[i];
  return m;
}

QMat commutator(const QMat& a, const QMat& b) { return a * b - b * a; }

QVec vec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_scaled(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool vec_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool vec_proportional(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return false;
  if (vec_is_zero(a) && vec_is_zero(b)) return true;
  // pick the first coordinate where either is nonzero
  std::size_t p = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 || b[i] != 0) {
      p = i;
      break;
    }
  if (p == a.size()) return true;
  if (a[p] == 0 || b[p] == 0) return false;
  const Rat s = a[p] / b[p];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != s * b[i]) return false;
  return true;
}

}  // namespace heis
