#include "heis/heisenberg.hpp"

#include <string>

namespace heis {

SymplecticSpace::SymplecticSpace(int n, QMat omega) : n_(n), omega_(std::move(omega)) {
  if (n < 0) throw std::invalid_argument("negative half-dimension");
  if (omega_.rows() != 2 * n || omega_.cols() != 2 * n)
    throw std::invalid_argument("skew form must be 2n x 2n");
  if (omega_ != -omega_.transposed()) throw std::invalid_argument("form is not skew-symmetric");
  if (n > 0 && !try_inverse(omega_)) throw std::invalid_argument("skew form is degenerate");
}

QMat SymplecticSpace::standard_omega(int n) {
  QMat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.at(i, n + i) = 1;
    m.at(n + i, i) = -1;
  }
  return m;
}

SymplecticSpace SymplecticSpace::standard(int n) { return SymplecticSpace(n, standard_omega(n)); }

bool SymplecticSpace::is_standard() const { return omega_ == standard_omega(n_); }

Rat SymplecticSpace::pair(const QVec& w1, const QVec& w2) const {
  if (static_cast<int>(w1.size()) != dim() || static_cast<int>(w2.size()) != dim())
    throw std::invalid_argument("vector length does not match symplectic dimension");
  Rat acc;
  for (int i = 0; i < dim(); ++i) {
    if (w1[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (omega_.at(i, j) != 0) acc += w1[i] * omega_.at(i, j) * w2[j];
  }
  return acc;
}

HeisenbergElement group_mul(const HeisenbergElement& a, const HeisenbergElement& b,
                            const SymplecticSpace& sp) {
  return HeisenbergElement{vec_add(a.w, b.w), a.t + b.t + sp.pair(a.w, b.w) / 2};
}

HeisenbergElement group_inverse(const HeisenbergElement& a) {
  return HeisenbergElement{vec_scaled(a.w, Rat(-1)), -a.t};
}

HeisenbergElement lie_bracket(const HeisenbergElement& a, const HeisenbergElement& b,
                              const SymplecticSpace& sp) {
  return HeisenbergElement{QVec(a.w.size(), Rat(0)), sp.pair(a.w, b.w)};
}

QMat exp_nilpotent(const QMat& m) {
  if (!m.is_square()) throw std::invalid_argument("exp of non-square matrix");
  const int d = m.rows();
  QMat acc = QMat::identity(d);
  QMat power = QMat::identity(d);
  Rat factorial(1);
  for (int k = 1; k <= d; ++k) {
    power = power * m;
    if (power.is_zero()) return acc;
    factorial *= k;
    acc = acc + power.scaled(Rat(1) / factorial);
  }
  throw std::invalid_argument("matrix is not nilpotent");
}

void HeisenbergMatRep::validate() const {
  if (static_cast<int>(X.size()) != 2 * n) throw std::invalid_argument("rep needs 2n basis matrices");
  if (omega.n() != n) throw std::invalid_argument("rep symplectic space has wrong half-dimension");
  for (const QMat& x : X)
    if (x.rows() != d || x.cols() != d || !x.is_strictly_upper_triangular())
      throw std::invalid_argument("rep basis matrix is not strictly upper triangular of size d");
  if (t_mat.rows() != d || t_mat.cols() != d || !t_mat.is_strictly_upper_triangular())
    throw std::invalid_argument("rep t is not strictly upper triangular of size d");
  for (int i = 0; i < 2 * n; ++i) {
    if (!commutator(X[i], t_mat).is_zero())
      throw std::invalid_argument("t is not central: [X_" + std::to_string(i + 1) + ", t] != 0");
    for (int j = 0; j < 2 * n; ++j)
      if (commutator(X[i], X[j]) != t_mat.scaled(omega.omega().at(i, j)))
        throw std::invalid_argument("bracket relation fails at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
  }
  std::vector<QMat> all = X;
  all.push_back(t_mat);
  if (span_close(all).dim() != 2 * n + 1)
    throw std::invalid_argument("rep is not faithful: basis span has wrong dimension");
}

QMat HeisenbergMatRep::element_matrix(const HeisenbergElement& g) const {
  if (static_cast<int>(g.w.size()) != 2 * n)
    throw std::invalid_argument("element has wrong w-dimension");
  QMat acc = t_mat.scaled(g.t);
  for (int i = 0; i < 2 * n; ++i)
    if (g.w[i] != 0) acc = acc + X[i].scaled(g.w[i]);
  return acc;
}

QMat HeisenbergMatRep::group_matrix(const HeisenbergElement& g) const {
  return exp_nilpotent(element_matrix(g));
}

QMat HeisenbergMatRep::bracket_table() const {
  QMat table(2 * n, 2 * n);
  // coefficient of t_mat in [X_i, X_j], read off at the first nonzero t entry
  int pi = -1, pj = -1;
  for (int i = 0; i < d && pi < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (t_mat.at(i, j) != 0) {
        pi = i;
        pj = j;
        break;
      }
  if (pi < 0) throw std::invalid_argument("t is zero");
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      const QMat br = commutator(X[i], X[j]);
      const Rat c = br.at(pi, pj) / t_mat.at(pi, pj);
      if (br != t_mat.scaled(c))
        throw std::invalid_argument("bracket is not a multiple of t");
      table.at(i, j) = c;
    }
  return table;
}

HeisenbergMatRep symplectic_basis_extract(const std::vector<QMat>& generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const int d = generators[0].rows();
  for (const QMat& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("generators must share dimensions");
    if (!g.is_strictly_upper_triangular())
      throw std::invalid_argument("generator is not strictly upper triangular");
  }

  const Subspace span = span_close(generators);
  const int dim = span.dim();
  if (dim < 3 || dim % 2 == 0)
    throw std::invalid_argument("span has dimension " + std::to_string(dim) +
                                ", not of Heisenberg type 2n+1");
  const int n = (dim - 1) / 2;
  const std::vector<QMat> basis = subspace_matrices(span, d, d);

  // derived algebra
  std::vector<QMat> brackets;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      QMat br = commutator(basis[i], basis[j]);
      if (!span.contains(br.flatten()))
        throw std::invalid_argument("generators do not span a Lie subalgebra");
      brackets.push_back(std::move(br));
    }
  const Subspace derived = span_close_shaped(d, d, brackets);
  if (derived.dim() != 1)
    throw std::invalid_argument("derived algebra has dimension " + std::to_string(derived.dim()));
  const QMat t = QMat::unflatten(d, d, derived.basis_vector(0));
  for (const QMat& b : basis)
    if (!commutator(b, t).is_zero())
      throw std::invalid_argument("derived algebra is not central");

  // complement of C t inside the span, greedily extended from the canonical basis
  std::vector<QMat> complement;
  {
    std::vector<QMat> chain = {t};
    Subspace grown = span_close(chain);
    for (const QMat& b : basis) {
      if (static_cast<int>(complement.size()) == 2 * n) break;
      if (grown.contains(b.flatten())) continue;
      chain.push_back(b);
      complement.push_back(b);
      grown = span_close(chain);
    }
  }

  // induced form on the complement: [w_i, w_j] = B_ij t
  int pi = -1, pj = -1;
  for (int i = 0; i < d && pi < 0; ++i)
    for (int j = 0; j < d; ++j)
      if (t.at(i, j) != 0) {
        pi = i;
        pj = j;
        break;
      }
  QMat form(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      const QMat br = commutator(complement[i], complement[j]);
      form.at(i, j) = br.at(pi, pj) / t.at(pi, pj);
    }
  if (!try_inverse(form)) throw std::invalid_argument("induced symplectic form is degenerate");

  // symplectic Gram-Schmidt in complement coordinates
  auto pair_coord = [&form](const QVec& u, const QVec& v) {
    Rat acc;
    for (int i = 0; i < form.rows(); ++i)
      if (u[i] != 0)
        for (int j = 0; j < form.cols(); ++j)
          if (form.at(i, j) != 0) acc += u[i] * form.at(i, j) * v[j];
    return acc;
  };
  std::vector<QVec> remaining;
  for (int i = 0; i < 2 * n; ++i) {
    QVec e(2 * n, Rat(0));
    e[i] = 1;
    remaining.push_back(e);
  }
  std::vector<QVec> ps, qs;
  while (!remaining.empty()) {
    const QVec p = remaining.front();
    std::size_t qi = 0;
    Rat pq;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      pq = pair_coord(p, remaining[i]);
      if (pq != 0) {
        qi = i;
        break;
      }
    }
    if (qi == 0) throw std::invalid_argument("induced symplectic form is degenerate");
    const QVec q = vec_scaled(remaining[qi], Rat(1) / pq);
    std::vector<QVec> next;
    for (std::size_t i = 1; i < remaining.size(); ++i) {
      if (i == qi) continue;
      const QVec& u = remaining[i];
      // u' = u + omega(u,p) q - omega(u,q) p is orthogonal to both p and q
      QVec u2 = vec_add(u, vec_scaled(q, pair_coord(u, p)));
      u2 = vec_sub(u2, vec_scaled(p, pair_coord(u, q)));
      next.push_back(std::move(u2));
    }
    ps.push_back(p);
    qs.push_back(q);
    remaining = std::move(next);
  }

  auto to_matrix = [&](const QVec& coord) {
    QMat acc(d, d);
    for (int i = 0; i < 2 * n; ++i)
      if (coord[i] != 0) acc = acc + complement[i].scaled(coord[i]);
    return acc;
  };
  HeisenbergMatRep rep;
  rep.n = n;
  rep.d = d;
  rep.omega = SymplecticSpace::standard(n);
  rep.t_mat = t;
  for (const QVec& p : ps) rep.X.push_back(to_matrix(p));
  for (const QVec& q : qs) rep.X.push_back(to_matrix(q));
  rep.validate();
  return rep;
}

}  // namespace heis
