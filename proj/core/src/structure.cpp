#include "heis/structure.hpp"

#include <string>

namespace heis {

StructureMatrix::StructureMatrix(int n, QMat m) : n_(n), m_(std::move(m)) {
  if (n < 1) throw std::invalid_argument("structure matrix needs n >= 1");
  if (m_.rows() != 2 * n || m_.cols() != 2 * n)
    throw std::invalid_argument("structure matrix must be 2n x 2n");
  if (m_ - m_.transposed() != SymplecticSpace::standard_omega(n))
    throw std::invalid_argument("M - M^t is not the standard skew form");
}

QMat symmetric_part(const QMat& m) { return (m + m.transposed()).scaled(rat(1, 2)); }

StructureMatrix extract_structure_matrix(const LocalAlgebra& loc, const HeisenbergMatRep& rep) {
  rep.validate();
  if (!rep.omega.is_standard())
    throw std::invalid_argument("rep basis is not symplectic for the standard form");
  const int n = rep.n;
  if (loc.algebra.dim() != 2 * n + 2)
    throw std::invalid_argument("algebra is not tautological: dim != 2n+2");
  std::vector<QMat> ideal_gens = rep.X;
  ideal_gens.push_back(rep.t_mat);
  if (span_close(ideal_gens) != loc.maximal_ideal)
    throw std::invalid_argument("maximal ideal is not spanned by the rep basis");

  // t-coordinate read-off position
  int pi = -1, pj = -1;
  for (int i = 0; i < rep.d && pi < 0; ++i)
    for (int j = 0; j < rep.d; ++j)
      if (rep.t_mat.at(i, j) != 0) {
        pi = i;
        pj = j;
        break;
      }
  QMat m(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      const QMat prod = rep.X[i] * rep.X[j];
      const Rat a = prod.at(pi, pj) / rep.t_mat.at(pi, pj);
      if (prod != rep.t_mat.scaled(a))
        throw std::invalid_argument("product X_" + std::to_string(i + 1) + " X_" +
                                    std::to_string(j + 1) +
                                    " is not a multiple of t; algebra is not tautological");
      m.at(i, j) = a;
    }
  return StructureMatrix(n, std::move(m));
}

std::pair<HeisenbergMatRep, LocalAlgebra> algebra_from_structure_matrix(const StructureMatrix& sm) {
  const int n = sm.n();
  const int d = 2 * n + 2;
  // left multiplication in the basis (t, X_1..X_2n, 1)
  HeisenbergMatRep rep;
  rep.n = n;
  rep.d = d;
  rep.omega = SymplecticSpace::standard(n);
  rep.t_mat = QMat::unit(d, 0, d - 1);
  for (int i = 0; i < 2 * n; ++i) {
    QMat x(d, d);
    x.at(i + 1, d - 1) = 1;  // X_i * 1 = X_i
    for (int j = 0; j < 2 * n; ++j) x.at(0, j + 1) = sm.M().at(i, j);  // X_i * X_j = a_ij t
    rep.X.push_back(std::move(x));
  }
  rep.validate();
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      if (rep.X[i] * rep.X[j] != rep.t_mat.scaled(sm.M().at(i, j)))
        throw std::invalid_argument("constructed rep violates X_i X_j = a_ij t");

  std::vector<QMat> gens = rep.X;
  gens.push_back(rep.t_mat);
  LocalAlgebra loc = local_anatomy(generate_algebra(gens, d));
  if (loc.algebra.dim() != d)
    throw std::invalid_argument("constructed algebra has unexpected dimension");
  return {std::move(rep), std::move(loc)};
}

QMat hamiltonian_matrix(const StructureMatrix& sm) {
  const QMat omega = SymplecticSpace::standard_omega(sm.n());
  return inverse(omega) * symmetric_part(sm.M());
}

std::vector<Rat> symplectic_invariant(const StructureMatrix& sm) {
  return char_poly(hamiltonian_matrix(sm));
}

InequivalenceCertificate certify_inequivalent(const StructureMatrix& a, const StructureMatrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("structure matrices have different sizes");
  InequivalenceCertificate cert{a, b, {}, {}, false, symmetric_part(a.M()), symmetric_part(b.M()),
                                hamiltonian_matrix(a), hamiltonian_matrix(b)};
  cert.invariant_left = char_poly(cert.ham_left);
  cert.invariant_right = char_poly(cert.ham_right);
  cert.inequivalent = cert.invariant_left != cert.invariant_right;
  return cert;
}

bool reverify_certificate(const InequivalenceCertificate& cert) {
  if (cert.left.n() != cert.right.n()) return false;
  const QMat omega = SymplecticSpace::standard_omega(cert.left.n());
  auto side_ok = [&](const StructureMatrix& sm, const QMat& sym, const QMat& ham,
                     const std::vector<Rat>& inv) {
    if (sm.M() - sm.M().transposed() != omega) return false;
    if (sym != symmetric_part(sm.M())) return false;
    if (ham != inverse(omega) * sym) return false;
    return inv == char_poly(ham);
  };
  if (!side_ok(cert.left, cert.sym_left, cert.ham_left, cert.invariant_left)) return false;
  if (!side_ok(cert.right, cert.sym_right, cert.ham_right, cert.invariant_right)) return false;
  return cert.inequivalent == (cert.invariant_left != cert.invariant_right);
}

std::vector<StructureMatrix> generate_family(int n, const std::vector<Rat>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] <= 0) throw std::invalid_argument("family labels must be positive");
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw std::invalid_argument("family labels must be distinct");
  }
  const QMat half_omega = SymplecticSpace::standard_omega(n).scaled(rat(1, 2));
  std::vector<StructureMatrix> family;
  family.reserve(labels.size());
  for (const Rat& lam : labels) {
    QMat m = half_omega;
    for (int i = 0; i < 2 * n; ++i) m.at(i, i) += lam;
    family.emplace_back(n, std::move(m));
  }
  return family;
}

std::optional<QMat> equivalence_witness(const StructureMatrix& a, const StructureMatrix& b,
                                        long budget) {
  if (a.n() != b.n()) throw std::invalid_argument("structure matrices have different sizes");
  if (symplectic_invariant(a) != symplectic_invariant(b)) return std::nullopt;
  return solve_congruence_candidate(a.M(), b.M(), budget);
}

}  // namespace heis
