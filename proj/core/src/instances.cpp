#include "heis/instances.hpp"

#include <algorithm>
#include <map>

namespace heis {

HeisenbergProjAction build_example(int n, int k) {
  if (n < 1) throw std::invalid_argument("build_example needs n >= 1");
  if (k < 0 || k > n) throw std::invalid_argument("build_example needs 0 <= k <= n");
  const int d = 2 * n + 2;
  HeisenbergMatRep rep;
  rep.n = n;
  rep.d = d;
  rep.omega = SymplecticSpace::standard(n);
  rep.t_mat = QMat::unit(d, 0, d - 1);
  for (int j = 0; j < n; ++j)
    rep.X.push_back(QMat::unit(d, 0, n + j + 1) + QMat::unit(d, n - j, d - 1));
  for (int q = 0; q < n; ++q) {
    QMat y = QMat::unit(d, n + q + 1, d - 1);
    if (n - q <= k) y = y + QMat::unit(d, q + 1, n + q + 1);
    rep.X.push_back(std::move(y));
  }
  rep.validate();
  return standard_frame(std::move(rep));
}

HeisenbergProjAction standard_frame(HeisenbergMatRep rep) {
  const int d = rep.d;
  std::vector<QVec> hyperplane;
  for (int i = 0; i + 1 < d; ++i) {
    QVec e(d, Rat(0));
    e[i] = 1;
    hyperplane.push_back(std::move(e));
  }
  HeisenbergProjAction h;
  h.rep = std::move(rep);
  h.boundary = Subspace::from_vectors(d, hyperplane);
  h.reference_point = QVec(d, Rat(0));
  h.reference_point[d - 1] = 1;
  h.validate();
  return h;
}

LocalAlgebra truncated_polynomial_algebra(const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("need at least one variable");
  long dim = 1;
  for (int m : degrees) {
    if (m < 1) throw std::invalid_argument("degrees must be >= 1");
    dim *= m;
  }
  // enumerate exponent vectors; index by mixed radix
  const int r = static_cast<int>(degrees.size());
  auto index_of = [&](const std::vector<int>& expo) {
    long idx = 0;
    for (int i = 0; i < r; ++i) idx = idx * degrees[i] + expo[i];
    return idx;
  };
  std::vector<QMat> gens;
  for (int v = 0; v < r; ++v) {
    QMat mul(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> expo(r, 0);
    for (long col = 0; col < dim; ++col) {
      // decode col into exponents
      long rem = col;
      for (int i = r - 1; i >= 0; --i) {
        expo[i] = static_cast<int>(rem % degrees[i]);
        rem /= degrees[i];
      }
      if (expo[v] + 1 < degrees[v]) {
        expo[v] += 1;
        mul.at(static_cast<int>(index_of(expo)), static_cast<int>(col)) = 1;
        expo[v] -= 1;
      }
    }
    if (!mul.is_zero()) gens.push_back(std::move(mul));
  }
  return local_anatomy(generate_algebra(gens, static_cast<int>(dim)));
}

long Rng::int_in(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(eng_);
}

Rat Rng::small_rat(long num_bound, long den_bound) {
  return rat(int_in(-num_bound, num_bound), int_in(1, den_bound));
}

Rat Rng::small_rat_nonzero(long num_bound, long den_bound) {
  for (;;) {
    Rat r = small_rat(num_bound, den_bound);
    if (r != 0) return r;
  }
}

QVec Rng::sign_vector(int len) {
  for (;;) {
    QVec v(len);
    bool nonzero = false;
    for (int i = 0; i < len; ++i) {
      v[i] = Rat(int_in(-1, 1));
      if (v[i] != 0) nonzero = true;
    }
    if (nonzero) return v;
  }
}

QMat random_symmetric(int dim, Rng& rng) {
  QMat s(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      s.at(i, j) = rng.small_rat();
      s.at(j, i) = s.at(i, j);
    }
  return s;
}

StructureMatrix random_structure_matrix(int n, Rng& rng) {
  QMat m = random_symmetric(2 * n, rng) + SymplecticSpace::standard_omega(n).scaled(rat(1, 2));
  return StructureMatrix(n, std::move(m));
}

QMat random_symplectic(int n, Rng& rng, int factors) {
  const QMat omega = SymplecticSpace::standard_omega(n);
  QMat c = QMat::identity(2 * n);
  for (int f = 0; f < factors; ++f)
    c = c * skew_transvection(omega, rng.sign_vector(2 * n), rng.small_rat_nonzero(2, 2));
  return c;
}

QMat random_unipotent_upper(int d, Rng& rng) {
  QMat p = QMat::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) p.at(i, j) = rng.small_rat(2, 2);
  return p;
}

HeisenbergElement random_heisenberg_element(int n, Rng& rng) {
  HeisenbergElement g;
  g.w.resize(2 * n);
  for (auto& x : g.w) x = rng.small_rat();
  g.t = rng.small_rat();
  return g;
}

TautologicalInstance random_tautological_instance(int n, Rng& rng, bool conjugate) {
  StructureMatrix sm = random_structure_matrix(n, rng);
  auto [rep, loc] = algebra_from_structure_matrix(sm);
  HeisenbergProjAction action = standard_frame(rep);
  if (conjugate) {
    const QMat p = random_unipotent_upper(rep.d, rng);
    const QMat pinv = inverse(p);
    HeisenbergMatRep crep = rep;
    for (QMat& x : crep.X) x = p * x * pinv;
    crep.t_mat = p * rep.t_mat * pinv;
    crep.validate();
    std::vector<QMat> gens = crep.X;
    gens.push_back(crep.t_mat);
    LocalAlgebra cloc = local_anatomy(generate_algebra(gens, crep.d));
    HeisenbergProjAction caction;
    caction.rep = crep;
    caction.boundary = action.boundary;  // unipotent upper maps preserve the hyperplane
    caction.reference_point = p.apply(action.reference_point);
    caction.validate();
    return TautologicalInstance{std::move(crep), std::move(cloc), std::move(caction), std::move(sm)};
  }
  return TautologicalInstance{std::move(rep), std::move(loc), std::move(action), std::move(sm)};
}

}  // namespace heis
