#include "heis/linalg.hpp"

#include <algorithm>

namespace heis {

QMat rref(QMat m, int* rank_out) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  if (rank_out) *rank_out = r;
  return m;
}

int rank(const QMat& m) {
  int r = 0;
  rref(m, &r);
  return r;
}

Subspace Subspace::from_spanning_rows(const QMat& spanning) {
  int r = 0;
  QMat red = rref(spanning, &r);
  Subspace s(spanning.cols());
  QMat basis(r, spanning.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < spanning.cols(); ++j) basis.at(i, j) = red.at(i, j);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::from_vectors(int ambient_dim, const std::vector<QVec>& vectors) {
  QMat m(static_cast<int>(vectors.size()), ambient_dim);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient_dim)
      throw std::invalid_argument("vector does not match ambient dimension");
    for (int j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j];
  }
  return from_spanning_rows(m);
}

namespace {

// Pivot column of each RREF basis row.
std::vector<int> pivot_columns(const QMat& basis) {
  std::vector<int> piv(basis.rows(), -1);
  for (int i = 0; i < basis.rows(); ++i)
    for (int j = 0; j < basis.cols(); ++j)
      if (basis.at(i, j) != 0) {
        piv[i] = j;
        break;
      }
  return piv;
}

}  // namespace

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
  const auto piv = pivot_columns(basis_);
  QVec coeff(basis_.rows());
  for (int i = 0; i < basis_.rows(); ++i) coeff[i] = v[piv[i]];
  // residual check makes membership exact
  QVec rec(ambient_, Rat(0));
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < ambient_; ++j) rec[j] += coeff[i] * basis_.at(i, j);
  for (int j = 0; j < ambient_; ++j)
    if (rec[j] != v[j]) return std::nullopt;
  return coeff;
}

bool Subspace::contains(const QVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch in sum");
  QMat stacked(dim() + other.dim(), ambient_);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int i = 0; i < other.dim(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(dim() + i, j) = other.basis_.at(i, j);
  return from_spanning_rows(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch in intersect");
  const int p = dim(), q = other.dim();
  if (p == 0 || q == 0) return Subspace(ambient_);
  // x = U^t a = W^t b  <=>  [U^t | -W^t] (a; b) = 0
  QMat sys(ambient_, p + q);
  for (int j = 0; j < ambient_; ++j) {
    for (int i = 0; i < p; ++i) sys.at(j, i) = basis_.at(i, j);
    for (int i = 0; i < q; ++i) sys.at(j, p + i) = -other.basis_.at(i, j);
  }
  const Subspace ker = kernel_basis(sys);
  std::vector<QVec> vectors;
  for (int k = 0; k < ker.dim(); ++k) {
    const QVec ab = ker.basis_vector(k);
    QVec x(ambient_, Rat(0));
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < ambient_; ++j) x[j] += ab[i] * basis_.at(i, j);
    vectors.push_back(std::move(x));
  }
  return from_vectors(ambient_, vectors);
}

Subspace span_close(const std::vector<QMat>& mats) {
  if (mats.empty()) return Subspace(0);
  return span_close_shaped(mats[0].rows(), mats[0].cols(), mats);
}

Subspace span_close_shaped(int rows, int cols, const std::vector<QMat>& mats) {
  QMat stacked(static_cast<int>(mats.size()), rows * cols);
  for (int i = 0; i < stacked.rows(); ++i) {
    if (mats[i].rows() != rows || mats[i].cols() != cols)
      throw std::invalid_argument("span_close: dimension mismatch among inputs");
    const QVec f = mats[i].flatten();
    for (int j = 0; j < stacked.cols(); ++j) stacked.at(i, j) = f[j];
  }
  return Subspace::from_spanning_rows(stacked);
}

std::vector<QMat> subspace_matrices(const Subspace& s, int rows, int cols) {
  if (s.ambient_dim() != rows * cols)
    throw std::invalid_argument("subspace ambient does not match matrix shape");
  std::vector<QMat> out;
  out.reserve(s.dim());
  for (int i = 0; i < s.dim(); ++i) out.push_back(QMat::unflatten(rows, cols, s.basis_vector(i)));
  return out;
}

Subspace kernel_basis(const QMat& m) {
  int r = 0;
  const QMat red = rref(m, &r);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (int row = 0; row < r; ++row)
    for (int c = 0; c < cols; ++c)
      if (red.at(row, c) != 0) {
        pivot_of_col[c] = row;
        break;
      }
  std::vector<QVec> vectors;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;  // pivot column
    QVec v(cols, Rat(0));
    v[c] = 1;
    for (int cc = 0; cc < cols; ++cc)
      if (pivot_of_col[cc] >= 0) v[cc] = -red.at(pivot_of_col[cc], c);
    vectors.push_back(std::move(v));
  }
  return Subspace::from_vectors(cols, vectors);
}

std::vector<Rat> char_poly(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  const int n = m.rows();
  std::vector<Rat> asc(n + 1);
  asc[n] = 1;
  if (n == 0) return asc;
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A (M_k + c_k I).
  QMat mk = m;
  std::vector<Rat> c(n + 1);  // c[k] multiplies x^{n-k}
  for (int k = 1; k <= n; ++k) {
    c[k] = -mk.trace() / k;
    if (k < n) {
      QMat shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c[k];
      mk = m * shifted;
    }
  }
  for (int k = 1; k <= n; ++k) asc[n - k] = c[k];
  return asc;
}

QMat poly_eval(const std::vector<Rat>& coeffs, const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_eval: non-square matrix");
  const int n = m.rows();
  QMat acc(n, n);
  // Horner on matrices
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
  }
  return acc;
}

std::optional<QMat> try_inverse(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  int r = 0;
  const QMat red = rref(aug, &r);
  // rank counts pivots anywhere; invertibility needs the left block reduced to I
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red.at(i, j) != ((i == j) ? Rat(1) : Rat(0))) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

QMat inverse(const QMat& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::invalid_argument("matrix is singular");
  return *inv;
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  QMat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const QMat red = rref(aug);
  QVec x(a.cols(), Rat(0));
  for (int i = 0; i < a.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j <= a.cols(); ++j)
      if (red.at(i, j) != 0) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == a.cols()) return std::nullopt;  // 0 = 1 row
    x[lead] = red.at(i, a.cols());
  }
  return x;
}

QMat skew_transvection(const QMat& skew, const QVec& v, const Rat& lambda) {
  const int m = skew.rows();
  QMat t = QMat::identity(m);
  // I + lambda v (v^t K): rank-one update
  const QVec vk = skew.transposed().apply(v);  // (v^t K)_j = sum_i v_i K_ij
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t.at(i, j) += lambda * v[i] * vk[j];
  return t;
}

namespace {

std::vector<Rat> search_lambdas() {
  return {Rat(1), Rat(-1), rat(1, 2), rat(-1, 2), Rat(2), Rat(-2), Rat(3), Rat(-3), rat(1, 3), rat(-1, 3)};
}

std::vector<QVec> search_vectors(int m) {
  std::vector<QVec> vs;
  for (int i = 0; i < m; ++i) {
    QVec v(m, Rat(0));
    v[i] = 1;
    vs.push_back(v);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      QVec v(m, Rat(0));
      v[i] = 1;
      v[j] = 1;
      vs.push_back(v);
      v[j] = -1;
      vs.push_back(v);
    }
  return vs;
}

}  // namespace

std::optional<QMat> solve_congruence_candidate(const QMat& a, const QMat& b, long bound) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("congruence search: need square matrices of equal size");
  const int m = a.rows();
  long tested = 0;
  auto accept = [&](const QMat& c) -> bool {
    ++tested;
    return c * b * c.transposed() == a;
  };
  const QMat id = QMat::identity(m);
  if (bound > 0 && accept(id)) return id;

  const QMat skew = a - a.transposed();
  if (b - b.transposed() != skew) return std::nullopt;  // stream preserves the skew part
  // transvections I + lambda v v^t K are K-congruence isometries iff K^2 is scalar
  const QMat k2 = skew * skew;
  bool scalar = m > 0 && !skew.is_zero();
  for (int i = 0; i < m && scalar; ++i)
    for (int j = 0; j < m && scalar; ++j)
      if (i == j ? (k2.at(i, i) != k2.at(0, 0)) : (k2.at(i, j) != 0)) scalar = false;
  if (!scalar || k2.at(0, 0) == 0) return std::nullopt;

  std::vector<QMat> singles;
  for (const QVec& v : search_vectors(m))
    for (const Rat& lam : search_lambdas()) singles.push_back(skew_transvection(skew, v, lam));

  for (const QMat& t : singles) {
    if (tested >= bound) return std::nullopt;
    if (accept(t)) return t;
  }
  for (const QMat& s1 : singles)
    for (const QMat& s2 : singles) {
      if (tested >= bound) return std::nullopt;
      const QMat c = s1 * s2;
      if (accept(c)) return c;
    }
  return std::nullopt;
}

}  // namespace heis
