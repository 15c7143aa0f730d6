#pragma once

#include <vector>

#include "heis/linalg.hpp"
#include "heis/qmat.hpp"

namespace heis {

/// 2n-dimensional symplectic space with an explicit skew form matrix.
/// The standard instance is Omega = [[0, I_n], [-I_n, 0]].
class SymplecticSpace {
 public:
  SymplecticSpace(int n, QMat omega);
  static SymplecticSpace standard(int n);
  static QMat standard_omega(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  const QMat& omega() const { return omega_; }
  bool is_standard() const;

  Rat pair(const QVec& w1, const QVec& w2) const;  // w1^t Omega w2

 private:
  int n_;
  QMat omega_;
};

/// Group/Lie-algebra element (w, t) of the (2n+1)-dimensional Heisenberg group.
struct HeisenbergElement {
  QVec w;
  Rat t;

  bool operator==(const HeisenbergElement& o) const { return w == o.w && t == o.t; }
};

// (w1, t1)(w2, t2) = (w1 + w2, t1 + t2 + omega(w1, w2)/2)
HeisenbergElement group_mul(const HeisenbergElement& a, const HeisenbergElement& b,
                            const SymplecticSpace& sp);
HeisenbergElement group_inverse(const HeisenbergElement& a);
// [(w1, t1), (w2, t2)] = (0, omega(w1, w2))
HeisenbergElement lie_bracket(const HeisenbergElement& a, const HeisenbergElement& b,
                              const SymplecticSpace& sp);

// Exact exp of a nilpotent matrix (finite sum of m^k / k!). Throws if m is
// not nilpotent.
QMat exp_nilpotent(const QMat& m);

/// Faithful matrix realization of the Heisenberg Lie algebra: basis
/// X_1..X_2n plus the central t_mat inside strictly upper triangular
/// d x d matrices, with [X_i, X_j] = omega_ij * t_mat.
struct HeisenbergMatRep {
  int n = 0;
  int d = 0;
  std::vector<QMat> X;
  QMat t_mat;
  SymplecticSpace omega = SymplecticSpace::standard(0);

  // Throws with a description of the first violated relation.
  void validate() const;

  // sum_i w_i X_i + t * t_mat
  QMat element_matrix(const HeisenbergElement& g) const;
  // exp of the above; a group homomorphism H_{2n+1} -> GL_d since the
  // bracket of any two algebra elements is central.
  QMat group_matrix(const HeisenbergElement& g) const;

  // 2n x 2n table of t-coefficients of [X_i, X_j]; equals omega for a valid rep.
  QMat bracket_table() const;
};

// Turns a spanning set of a Heisenberg-type Lie subalgebra (strictly upper
// triangular, derived algebra of dimension 1 and central, nondegenerate
// induced form) into a rep with the standard symplectic bracket table.
// Deterministic: canonical span bases and first-pivot choices throughout.
HeisenbergMatRep symplectic_basis_extract(const std::vector<QMat>& generators);

}  // namespace heis
