#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "heis/correspondence.hpp"
#include "heis/structure.hpp"

namespace heis {

// The closed-form family of Heisenberg structures on P^(2n+1) whose generated
// algebra has dimension 2n+2+k, for 0 <= k <= n. Realized so that the last
// coordinate vector has a dense orbit, the boundary is {last coordinate 0},
// t = E_{1,2n+2}, and the bracket table is the standard Omega.
HeisenbergProjAction build_example(int n, int k);

// Q[x_1..x_r]/(x_1^{m_1}, ..., x_r^{m_r}) in its regular representation on
// the monomial basis; commutative local of dimension m_1 * ... * m_r.
LocalAlgebra truncated_polynomial_algebra(const std::vector<int>& degrees);

/// Deterministic generator stream for the seeded checks and property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi);  // inclusive
  Rat small_rat(long num_bound = 3, long den_bound = 3);
  Rat small_rat_nonzero(long num_bound = 3, long den_bound = 3);
  QVec sign_vector(int len);  // entries in {-1,0,1}, never all zero

 private:
  std::mt19937_64 eng_;
};

QMat random_symmetric(int dim, Rng& rng);
StructureMatrix random_structure_matrix(int n, Rng& rng);
// Product of `factors` symplectic transvections for the standard form.
QMat random_symplectic(int n, Rng& rng, int factors = 4);
// Unipotent upper triangular with small rational entries.
QMat random_unipotent_upper(int d, Rng& rng);
HeisenbergElement random_heisenberg_element(int n, Rng& rng);

/// A random tautological structure: the algebra of a random structure
/// matrix, optionally conjugated by a random unipotent change of basis
/// (which preserves the frame and the structure matrix).
struct TautologicalInstance {
  HeisenbergMatRep rep;
  LocalAlgebra loc;
  HeisenbergProjAction action;
  StructureMatrix sm;
};

TautologicalInstance random_tautological_instance(int n, Rng& rng, bool conjugate = true);

// The standard frame around a rep acting on Q^(2n+2): boundary
// {last coordinate = 0}, reference point e_{2n+2}.
HeisenbergProjAction standard_frame(HeisenbergMatRep rep);

}  // namespace heis
