#pragma once

#include <optional>
#include <vector>

#include "heis/qmat.hpp"

namespace heis {

/// A linear subspace of Q^ambient_dim in canonical form: the stored basis is
/// the reduced row echelon form of any spanning set, rows ordered by pivot
/// column. Two equal subspaces compare equal entry-by-entry.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Canonicalizes the rows of `spanning` (not assumed independent).
  static Subspace from_spanning_rows(const QMat& spanning);
  static Subspace from_vectors(int ambient_dim, const std::vector<QVec>& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  QVec basis_vector(int i) const { return basis_.row(i); }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  // Coordinates of v in the canonical basis, if v lies in the subspace.
  std::optional<QVec> coordinates(const QVec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  int ambient_;
  QMat basis_;  // RREF rows
};

// In-place Gauss-Jordan over Q. Returns the RREF; rank reported if requested.
QMat rref(QMat m, int* rank_out = nullptr);
int rank(const QMat& m);

// Canonical span of matrices (all of one shape), flattened row-major into
// Q^(rows*cols). Empty input yields the zero subspace of dimension 0 ambient 0;
// callers that know the shape should use span_close_shaped.
Subspace span_close(const std::vector<QMat>& mats);
Subspace span_close_shaped(int rows, int cols, const std::vector<QMat>& mats);

// Members of a flattened-matrix subspace, unflattened back to shape.
std::vector<QMat> subspace_matrices(const Subspace& s, int rows, int cols);

// Right null space of m, canonical.
Subspace kernel_basis(const QMat& m);

// Exact characteristic polynomial of a square matrix by Faddeev-LeVerrier.
// Coefficients ascending: c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<Rat> char_poly(const QMat& m);

// Evaluates a polynomial (ascending coefficients) at a square matrix.
QMat poly_eval(const std::vector<Rat>& coeffs, const QMat& m);

std::optional<QMat> try_inverse(const QMat& m);
QMat inverse(const QMat& m);  // throws on singular

// One solution x of A x = b, if consistent.
std::optional<QVec> solve_linear(const QMat& a, const QVec& b);

// Best-effort bounded search for an invertible C with a = C * b * C^t.
// The candidate stream enumerates products of transvections adapted to the
// common skew part (valid whenever (a - a^t)^2 is a nonzero scalar matrix,
// which covers the standard symplectic form). `bound` caps the number of
// candidates tested. Absence of a witness proves nothing.
std::optional<QMat> solve_congruence_candidate(const QMat& a, const QMat& b, long bound);

// The transvection I + lambda * v v^t * skew; symplectic for the standard form.
QMat skew_transvection(const QMat& skew, const QVec& v, const Rat& lambda);

}  // namespace heis
