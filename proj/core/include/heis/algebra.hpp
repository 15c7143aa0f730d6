#pragma once

#include <vector>

#include "heis/linalg.hpp"
#include "heis/qmat.hpp"

namespace heis {

/// Unital associative subalgebra of Mat_d(Q), stored by its canonical basis
/// (RREF of the flattened span). Construction verifies multiplicative closure
/// and that the identity lies in the span.
class MatAlgebra {
 public:
  MatAlgebra(int d, std::vector<QMat> basis);

  int ambient_size() const { return d_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QMat>& basis() const { return basis_; }
  const Subspace& span() const { return span_; }

  bool contains(const QMat& m) const { return span_.contains(m.flatten()); }
  // Exact coordinates of m in the canonical basis; throws if m is outside.
  QVec coordinates(const QMat& m) const;

 private:
  int d_;
  std::vector<QMat> basis_;
  Subspace span_;
};

// Smallest unital associative subalgebra containing the generators, by
// breadth-first pairwise multiplication with canonical re-echelonization
// each round. The identity is always adjoined. ambient_size is only needed
// when the generator list is empty.
MatAlgebra generate_algebra(const std::vector<QMat>& generators, int ambient_size = -1);

/// Local-algebra anatomy: A = Q I + m with m the nilpotent maximal ideal.
/// All subspaces live in the flattened ambient Q^(d*d).
struct LocalAlgebra {
  MatAlgebra algebra;
  Subspace maximal_ideal;
  Subspace center;
  std::vector<Subspace> filtration;  // m, m^2, ... last entry is the zero subspace

  int ambient_size() const { return algebra.ambient_size(); }
  std::vector<QMat> ideal_basis() const;
  bool is_commutative() const { return center.dim() == algebra.dim(); }
};

// Splits each basis element as (tr(b)/d) I + nilpotent; throws
// "not a unipotent local algebra" if some nilpotent part fails to be
// nilpotent or the scalar parts do not account for exactly one dimension.
LocalAlgebra local_anatomy(const MatAlgebra& a);

// m^k as a subspace (k >= 1); the zero subspace once the filtration dies.
Subspace ideal_power(const LocalAlgebra& loc, int k);

// Elements commuting with the whole algebra, as a subspace of Q^(d*d).
Subspace center_of(const MatAlgebra& a);

}  // namespace heis
