#include "heis/correspondence.hpp"

namespace heis {

namespace {

bool nilpotent(QMat m) {
  const int d = m.rows();
  for (int k = 0; k < d; ++k) {
    if (m.is_zero()) return true;
    m = m * m;
  }
  return m.is_zero();
}

// rank of [b * ref for b in basis] as column vectors
int orbit_rank(const std::vector<QMat>& basis, const QVec& ref, int d) {
  QMat cols(d, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QVec img = basis[j].apply(ref);
    for (int i = 0; i < d; ++i) cols.at(i, static_cast<int>(j)) = img[i];
  }
  return rank(cols);
}

}  // namespace

void AdditiveProjAction::validate() const {
  if (static_cast<int>(generators.size()) != n)
    throw std::invalid_argument("additive action needs n generators");
  if (static_cast<int>(reference_point.size()) != d)
    throw std::invalid_argument("reference point has wrong dimension");
  for (const QMat& g : generators) {
    if (g.rows() != d || g.cols() != d)
      throw std::invalid_argument("generator has wrong shape");
    if (!nilpotent(g)) throw std::invalid_argument("generator is not nilpotent");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commutator(generators[i], generators[j]).is_zero())
        throw std::invalid_argument("generators do not commute");
  if (n > 0 && span_close(generators).dim() != n)
    throw std::invalid_argument("generators are not linearly independent");
  const MatAlgebra a = generate_algebra(generators, d);
  if (orbit_rank(a.basis(), reference_point, d) != d)
    throw std::invalid_argument("orbit of the reference point is not dense");
}

AdditiveProjAction algebra_to_action(const LocalAlgebra& loc) {
  if (!loc.is_commutative())
    throw std::invalid_argument("algebra is not commutative");
  const int dim = loc.algebra.dim();
  AdditiveProjAction act;
  act.n = dim - 1;
  act.d = dim;
  // left multiplication in the canonical algebra basis
  for (const QMat& m : loc.ideal_basis()) {
    QMat op(dim, dim);
    for (int j = 0; j < dim; ++j) {
      const QVec col = loc.algebra.coordinates(m * loc.algebra.basis()[j]);
      for (int i = 0; i < dim; ++i) op.at(i, j) = col[i];
    }
    act.generators.push_back(std::move(op));
  }
  act.reference_point = loc.algebra.coordinates(QMat::identity(loc.ambient_size()));
  act.validate();
  return act;
}

LocalAlgebra action_to_algebra(const AdditiveProjAction& act) {
  act.validate();
  const MatAlgebra a = generate_algebra(act.generators, act.d);
  if (a.dim() != act.d)
    throw std::invalid_argument("closure has dimension " + std::to_string(a.dim()) +
                                ", expected " + std::to_string(act.d));
  LocalAlgebra loc = local_anatomy(a);
  if (!loc.is_commutative()) throw std::invalid_argument("closure is not commutative");
  return loc;
}

void HeisenbergProjAction::validate() const {
  rep.validate();
  const int d = rep.d;
  if (boundary.ambient_dim() != d) throw std::invalid_argument("boundary has wrong ambient dimension");
  if (boundary.dim() != d - 1)
    throw std::invalid_argument("boundary must be a hyperplane (dim 2n+1)");
  if (static_cast<int>(reference_point.size()) != d)
    throw std::invalid_argument("reference point has wrong dimension");
  if (boundary.contains(reference_point))
    throw std::invalid_argument("reference point lies on the boundary");
  std::vector<QMat> gens = rep.X;
  gens.push_back(rep.t_mat);
  for (const QMat& g : gens)
    for (int i = 0; i < boundary.dim(); ++i)
      if (!boundary.contains(g.apply(boundary.basis_vector(i))))
        throw std::invalid_argument("group does not preserve the boundary");
  const MatAlgebra a = generate_algebra(gens, d);
  if (orbit_rank(a.basis(), reference_point, d) != d)
    throw std::invalid_argument("orbit of the reference point is not dense");
}

MatAlgebra HeisenbergProjAction::generated_algebra() const {
  std::vector<QMat> gens = rep.X;
  gens.push_back(rep.t_mat);
  return generate_algebra(gens, rep.d);
}

bool boundary_fixed_check(const HeisenbergProjAction& h) {
  for (int i = 0; i < h.boundary.dim(); ++i)
    if (!vec_is_zero(h.rep.t_mat.apply(h.boundary.basis_vector(i)))) return false;
  return true;
}

QVec fixed_direction(const HeisenbergProjAction& h) {
  if (!boundary_fixed_check(h))
    throw std::invalid_argument("central element does not fix the boundary pointwise");
  QVec v = h.rep.t_mat.apply(h.reference_point);
  int pivot = -1;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  if (pivot < 0)
    throw std::invalid_argument("t annihilates the reference point; action degenerate");
  return vec_scaled(v, Rat(1) / v[pivot]);
}

DescentResult descend_action(const HeisenbergProjAction& h) {
  const int d = h.rep.d;
  DescentResult res;
  res.fixed_dir = fixed_direction(h);
  for (int i = 0; i < d; ++i)
    if (res.fixed_dir[i] != 0) {
      res.dropped_coordinate = i;
      break;
    }
  const int p = res.dropped_coordinate;

  std::vector<QMat> gens = h.rep.X;
  gens.push_back(h.rep.t_mat);
  for (const QMat& g : gens)
    if (!vec_is_zero(g.apply(res.fixed_dir)))
      throw std::invalid_argument("fixed direction is not annihilated by a generator");

  res.projection = QMat(d - 1, d);
  res.section = QMat(d, d - 1);
  for (int i = 0; i < d; ++i) {
    if (i == p) continue;
    res.complement.push_back(i);
    const int r = static_cast<int>(res.complement.size()) - 1;
    res.projection.at(r, i) = 1;
    res.projection.at(r, p) = -res.fixed_dir[i];
    res.section.at(i, r) = 1;
  }

  if (!res.push(h.rep.t_mat).is_zero())
    throw std::invalid_argument("central element does not vanish on the quotient");

  res.quotient_action.n = 2 * h.rep.n;
  res.quotient_action.d = d - 1;
  for (const QMat& x : h.rep.X) res.quotient_action.generators.push_back(res.push(x));
  res.quotient_action.reference_point = res.projection.apply(h.reference_point);
  res.quotient_action.validate();
  res.tautological = is_tautological(res.quotient_action);
  return res;
}

bool is_tautological(const AdditiveProjAction& act) {
  for (const QMat& a : act.generators)
    for (const QMat& b : act.generators)
      if (!(a * b).is_zero()) return false;
  std::vector<QMat> lifted = act.generators;
  lifted.push_back(QMat::identity(act.d));
  return orbit_rank(lifted, act.reference_point, act.d) == act.d;
}

Subspace evaluation_kernel(const LocalAlgebra& loc, const QVec& reference) {
  const int d = loc.ambient_size();
  if (static_cast<int>(reference.size()) != d)
    throw std::invalid_argument("reference has wrong dimension");
  const auto& basis = loc.algebra.basis();
  QMat ev(d, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const QVec img = basis[j].apply(reference);
    for (int i = 0; i < d; ++i) ev.at(i, static_cast<int>(j)) = img[i];
  }
  if (rank(ev) != d) throw std::invalid_argument("reference orbit is not dense");
  const Subspace coeff = kernel_basis(ev);
  std::vector<QMat> mats;
  for (int k = 0; k < coeff.dim(); ++k) {
    const QVec x = coeff.basis_vector(k);
    QMat s(d, d);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (x[i] != 0) s = s + basis[i].scaled(x[i]);
    mats.push_back(std::move(s));
  }
  return span_close_shaped(d, d, mats);
}

}  // namespace heis
