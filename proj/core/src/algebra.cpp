#include "heis/algebra.hpp"

namespace heis {

MatAlgebra::MatAlgebra(int d, std::vector<QMat> basis) : d_(d) {
  for (const QMat& b : basis)
    if (b.rows() != d || b.cols() != d)
      throw std::invalid_argument("algebra basis element has wrong shape");
  span_ = span_close_shaped(d, d, basis);
  basis_ = subspace_matrices(span_, d, d);
  if (!span_.contains(QMat::identity(d).flatten()))
    throw std::invalid_argument("algebra does not contain the identity");
  for (const QMat& a : basis_)
    for (const QMat& b : basis_)
      if (!span_.contains((a * b).flatten()))
        throw std::invalid_argument("basis is not multiplicatively closed");
}

QVec MatAlgebra::coordinates(const QMat& m) const {
  auto c = span_.coordinates(m.flatten());
  if (!c) throw std::invalid_argument("matrix is not in the algebra");
  return *c;
}

MatAlgebra generate_algebra(const std::vector<QMat>& generators, int ambient_size) {
  int d = ambient_size;
  for (const QMat& g : generators) {
    if (!g.is_square()) throw std::invalid_argument("generators must be square");
    if (d < 0) d = g.rows();
    if (g.rows() != d) throw std::invalid_argument("generators must share dimensions");
  }
  if (d < 0) throw std::invalid_argument("generate_algebra needs at least one generator or a size");

  std::vector<QMat> current = generators;
  current.push_back(QMat::identity(d));
  Subspace span = span_close_shaped(d, d, current);
  for (;;) {
    std::vector<QMat> basis = subspace_matrices(span, d, d);
    std::vector<QMat> grown = basis;
    for (const QMat& a : basis)
      for (const QMat& b : basis) {
        QMat p = a * b;
        if (!span.contains(p.flatten())) grown.push_back(std::move(p));
      }
    const Subspace next = span_close_shaped(d, d, grown);
    if (next.dim() == span.dim()) break;
    span = next;
  }
  return MatAlgebra(d, subspace_matrices(span, d, d));
}

std::vector<QMat> LocalAlgebra::ideal_basis() const {
  return subspace_matrices(maximal_ideal, ambient_size(), ambient_size());
}

LocalAlgebra local_anatomy(const MatAlgebra& a) {
  const int d = a.ambient_size();
  auto is_nilpotent = [d](QMat m) {
    for (int k = 0; k < d; ++k) {
      if (m.is_zero()) return true;
      m = m * m;  // squaring reaches index d fast
    }
    return m.is_zero();
  };

  std::vector<QMat> nilpotent_parts;
  for (const QMat& b : a.basis()) {
    const Rat scalar = b.trace() / d;
    QMat nil = b;
    for (int i = 0; i < d; ++i) nil.at(i, i) -= scalar;
    if (!is_nilpotent(nil))
      throw std::invalid_argument("not a unipotent local algebra");
    if (!nil.is_zero()) nilpotent_parts.push_back(std::move(nil));
  }
  const Subspace ideal = span_close_shaped(d, d, nilpotent_parts);
  if (ideal.dim() != a.dim() - 1)
    throw std::invalid_argument("not a unipotent local algebra");

  LocalAlgebra loc{a, ideal, center_of(a), {}};

  // powers of the maximal ideal until zero
  const std::vector<QMat> mgens = subspace_matrices(ideal, d, d);
  Subspace power = ideal;
  loc.filtration.push_back(power);
  while (power.dim() > 0) {
    std::vector<QMat> products;
    for (const QMat& m : mgens)
      for (const QMat& p : subspace_matrices(power, d, d)) products.push_back(m * p);
    Subspace next = span_close_shaped(d, d, products);
    if (next.dim() >= power.dim())
      throw std::invalid_argument("ideal filtration fails to decrease; algebra is not local");
    loc.filtration.push_back(next);
    power = std::move(next);
  }
  return loc;
}

Subspace ideal_power(const LocalAlgebra& loc, int k) {
  if (k < 1) throw std::invalid_argument("ideal power needs k >= 1");
  const int d = loc.ambient_size();
  if (k <= static_cast<int>(loc.filtration.size())) return loc.filtration[k - 1];
  return Subspace(d * d);  // beyond nilpotency degree
}

Subspace center_of(const MatAlgebra& a) {
  const int d = a.ambient_size();
  const int dim = a.dim();
  // stack [b_i, b_j] as column blocks: solve sum_i x_i [b_i, b_j] = 0 for all j
  QMat sys(dim * d * d, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const QVec br = commutator(a.basis()[i], a.basis()[j]).flatten();
      for (int e = 0; e < d * d; ++e) sys.at(j * d * d + e, i) = br[e];
    }
  const Subspace coeff_kernel = kernel_basis(sys);
  std::vector<QMat> central;
  for (int k = 0; k < coeff_kernel.dim(); ++k) {
    const QVec x = coeff_kernel.basis_vector(k);
    QMat z(d, d);
    for (int i = 0; i < dim; ++i)
      if (x[i] != 0) z = z + a.basis()[i].scaled(x[i]);
    central.push_back(std::move(z));
  }
  return span_close_shaped(d, d, central);
}

}  // namespace heis
