#pragma once

#include <vector>

#include "heis/algebra.hpp"
#include "heis/heisenberg.hpp"

namespace heis {

/// Effective G_a^n-action on P^(d-1) with a dense open orbit, given by n
/// pairwise commuting nilpotent generators and a lift of the reference point.
struct AdditiveProjAction {
  int n = 0;
  int d = 0;
  std::vector<QMat> generators;
  QVec reference_point;

  // commuting + nilpotent + linearly independent generators, dense orbit
  void validate() const;
};

// The tautological action of exp(m) on the algebra itself: left-multiplication
// operators of the maximal-ideal basis in the algebra's canonical basis,
// reference point = the unit. Requires a commutative local algebra.
AdditiveProjAction algebra_to_action(const LocalAlgebra& loc);

// Closure of the generators plus identity; checks the output is a
// commutative local algebra of dimension d.
LocalAlgebra action_to_algebra(const AdditiveProjAction& act);

/// Heisenberg structure on P^(2n+1): a faithful rep together with the
/// boundary hyperplane V' and a reference point off V' with dense orbit.
struct HeisenbergProjAction {
  HeisenbergMatRep rep;
  Subspace boundary;
  QVec reference_point;

  void validate() const;
  // <X_1..X_2n, t, I>, the algebra the structure generates
  MatAlgebra generated_algebra() const;
};

// True iff t_mat annihilates the boundary. For nilpotent t, fixing [x]
// projectively forces t x = 0, so the linear test is exact.
bool boundary_fixed_check(const HeisenbergProjAction& h);

// v = t * reference, the direction the whole group fixes; canonical
// representative with leading coefficient 1. Requires boundary_fixed_check.
QVec fixed_direction(const HeisenbergProjAction& h);

/// Quotient data for P(V / C v): the projection/section pair for the
/// canonical complement (all coordinates except the pivot of v), the induced
/// G_a^2n-action, and whether it is tautological.
struct DescentResult {
  QVec fixed_dir;
  int dropped_coordinate = -1;
  std::vector<int> complement;
  QMat projection;  // (d-1) x d
  QMat section;     // d x (d-1)
  AdditiveProjAction quotient_action;
  bool tautological = false;

  // image of an algebra element in End(V / C v)
  QMat push(const QMat& m) const { return projection * m * section; }
};

DescentResult descend_action(const HeisenbergProjAction& h);

// m_B^2 = 0 and {o, N_i o} spans: exactly the pure-translation structures.
bool is_tautological(const AdditiveProjAction& act);

// ker(ev) = {S in A : S * reference = 0} as a subspace of the flattened
// matrix space. Throws if the reference orbit is not dense.
Subspace evaluation_kernel(const LocalAlgebra& loc, const QVec& reference);

}  // namespace heis
