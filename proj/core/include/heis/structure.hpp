#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "heis/algebra.hpp"
#include "heis/heisenberg.hpp"

namespace heis {

/// 2n x 2n matrix (a_ij) with X_i X_j = a_ij t for a symplectic basis of a
/// tautological algebra; the skew part is pinned to the standard Omega.
class StructureMatrix {
 public:
  StructureMatrix(int n, QMat m);

  int n() const { return n_; }
  const QMat& M() const { return m_; }
  bool operator==(const StructureMatrix& o) const { return n_ == o.n_ && m_ == o.m_; }

 private:
  int n_;
  QMat m_;
};

QMat symmetric_part(const QMat& m);  // (M + M^t)/2

// Reads a_ij off the products X_i X_j of the rep basis. The algebra must be
// tautological: dimension 2n+2 with maximal ideal spanned by the rep, and
// every product a multiple of t.
StructureMatrix extract_structure_matrix(const LocalAlgebra& loc, const HeisenbergMatRep& rep);

// Left-regular realization of the algebra Q I + <t, X_1..X_2n> in the basis
// (t, X_1, ..., X_2n, 1): strictly upper triangular, X_i X_j = a_ij t,
// dimension 2n+2. Round-trips exactly with extract_structure_matrix.
std::pair<HeisenbergMatRep, LocalAlgebra> algebra_from_structure_matrix(const StructureMatrix& sm);

// char poly of Omega^{-1} S(M), ascending coefficients. Invariant under
// M -> C M C^t for C in Sp(Omega), and under the scalar-relaxed equivalence
// k M1 = C M2 C^t (the k cancels between S and Omega). Sound, not complete.
std::vector<Rat> symplectic_invariant(const StructureMatrix& sm);
QMat hamiltonian_matrix(const StructureMatrix& sm);  // Omega^{-1} S(M)

/// Self-contained certificate: a true verdict proves the two algebras
/// non-isomorphic, hence the Heisenberg structures inequivalent. A false
/// verdict only means this invariant does not distinguish them.
struct InequivalenceCertificate {
  StructureMatrix left;
  StructureMatrix right;
  std::vector<Rat> invariant_left;
  std::vector<Rat> invariant_right;
  bool inequivalent = false;
  QMat sym_left, sym_right;  // transcript: S(M)
  QMat ham_left, ham_right;  // transcript: Omega^{-1} S(M)
};

InequivalenceCertificate certify_inequivalent(const StructureMatrix& a, const StructureMatrix& b);

// Replays a certificate from its transcript using only kernel operations;
// true iff every recomputed quantity matches and the verdict is consistent.
bool reverify_certificate(const InequivalenceCertificate& cert);

// M_lambda = lambda I + Omega/2; invariants (x^2 + lambda^2)^n separate
// distinct positive labels. Throws on repeated or non-positive labels.
std::vector<StructureMatrix> generate_family(int n, const std::vector<Rat>& labels);

// Bounded search for a symplectic C with a.M = C b.M C^t (any witness of the
// congruence is symplectic since both skew parts equal Omega). Returns
// nothing immediately when the invariants already differ.
std::optional<QMat> equivalence_witness(const StructureMatrix& a, const StructureMatrix& b,
                                        long budget);

}  // namespace heis
