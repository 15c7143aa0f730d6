#include <doctest.h>

#include "heis/instances.hpp"

using namespace heis;

namespace {

// independent oracle for the standard pairing: sum_i (a_i b_{n+i} - a_{n+i} b_i)
Rat standard_pairing(const QVec& a, const QVec& b) {
  const int n = static_cast<int>(a.size()) / 2;
  Rat acc;
  for (int i = 0; i < n; ++i) acc += a[i] * b[n + i] - a[n + i] * b[i];
  return acc;
}

// independent oracle for exp: plain truncated series, no nilpotency shortcut
QMat series_exp(const QMat& m, int terms) {
  QMat acc = QMat::identity(m.rows());
  QMat power = QMat::identity(m.rows());
  Rat factorial(1);
  for (int k = 1; k <= terms; ++k) {
    power = power * m;
    factorial *= k;
    acc = acc + power.scaled(Rat(1) / factorial);
  }
  return acc;
}

HeisenbergElement elem(std::initializer_list<long> w, long t_num, long t_den = 1) {
  HeisenbergElement g;
  for (long x : w) g.w.push_back(Rat(x));
  g.t = rat(t_num, t_den);
  return g;
}

}  // namespace

TEST_CASE("group law on pinned instances") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const auto p = group_mul(elem({1, 0}, 0), elem({0, 1}, 0), sp);
  CHECK(p.w == QVec{Rat(1), Rat(1)});
  CHECK(p.t == rat(1, 2));

  const auto g = elem({3, -2}, 5);
  const auto e = group_mul(g, group_inverse(g), sp);
  CHECK(vec_is_zero(e.w));
  CHECK(e.t == 0);

  const auto parallel = group_mul(elem({1, 0}, 0), elem({2, 0}, 5), sp);
  CHECK(parallel.w == QVec{Rat(3), Rat(0)});
  CHECK(parallel.t == Rat(5));

  CHECK_THROWS_AS(group_mul(elem({1, 0}, 0), elem({1, 0, 0, 0}, 0), sp), std::invalid_argument);
}

TEST_CASE("lie bracket on pinned instances") {
  const SymplecticSpace sp = SymplecticSpace::standard(1);
  const auto b = lie_bracket(elem({1, 0}, 0), elem({0, 1}, 0), sp);
  CHECK(vec_is_zero(b.w));
  CHECK(b.t == Rat(1));
  const auto a = elem({2, -3}, 7);
  CHECK(lie_bracket(a, a, sp).t == 0);
  CHECK(lie_bracket(elem({2, 0}, 3), elem({0, 5}, 7), sp).t == Rat(10));
}

TEST_CASE("bracket agrees with the pairing oracle") {
  Rng rng(21);
  for (int n = 1; n <= 3; ++n) {
    const SymplecticSpace sp = SymplecticSpace::standard(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_heisenberg_element(n, rng);
      const auto b = random_heisenberg_element(n, rng);
      CHECK(lie_bracket(a, b, sp).t == standard_pairing(a.w, b.w));
    }
  }
}

TEST_CASE("group law is associative") {
  Rng rng(22);
  for (int n = 1; n <= 3; ++n) {
    const SymplecticSpace sp = SymplecticSpace::standard(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_heisenberg_element(n, rng);
      const auto b = random_heisenberg_element(n, rng);
      const auto c = random_heisenberg_element(n, rng);
      CHECK(group_mul(group_mul(a, b, sp), c, sp) == group_mul(a, group_mul(b, c, sp), sp));
    }
  }
}

TEST_CASE("exp_nilpotent on pinned instances") {
  const QMat e12 = QMat::unit(2, 0, 1);
  CHECK(exp_nilpotent(e12) == QMat::identity(2) + e12);
  CHECK(exp_nilpotent(QMat::zero(3, 3)) == QMat::identity(3));

  const QMat m = QMat::unit(3, 0, 1) + QMat::unit(3, 1, 2);
  const QMat expected =
      QMat::identity(3) + QMat::unit(3, 0, 1) + QMat::unit(3, 1, 2) + QMat::unit(3, 0, 2).scaled(rat(1, 2));
  CHECK(exp_nilpotent(m) == expected);
  CHECK(exp_nilpotent(m) == series_exp(m, 10));

  CHECK_THROWS_AS(exp_nilpotent(QMat::identity(2)), std::invalid_argument);
}

TEST_CASE("exp matches the series oracle on random strictly upper input") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    QMat m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) m.at(i, j) = rng.small_rat();
    CHECK(exp_nilpotent(m) == series_exp(m, 12));
  }
}

TEST_CASE("symplectic basis extraction normalizes the bracket table") {
  // the closed-form basis at n=1, k=0 written with a mixed pairing
  const QMat x1 = QMat::unit(4, 0, 1);
  const QMat y1 = QMat::unit(4, 0, 2) + QMat::unit(4, 1, 3);
  const QMat t = QMat::unit(4, 0, 3);

  const HeisenbergMatRep rep = symplectic_basis_extract({x1, y1, t});
  CHECK(rep.n == 1);
  CHECK(rep.d == 4);
  CHECK(rep.t_mat == t);  // canonical generator of the derived algebra
  CHECK(rep.bracket_table() == SymplecticSpace::standard_omega(1));
  // same Lie algebra, just a different basis
  std::vector<QMat> out = rep.X;
  out.push_back(rep.t_mat);
  CHECK(span_close(out) == span_close({x1, y1, t}));

  SUBCASE("a central shift does not change the bracket table") {
    const HeisenbergMatRep shifted = symplectic_basis_extract({x1 + t, y1, t});
    CHECK(shifted.bracket_table() == SymplecticSpace::standard_omega(1));
    CHECK(shifted.t_mat == t);
  }
}

TEST_CASE("symplectic basis extraction rejects non-Heisenberg spans") {
  const QMat a = QMat::unit(4, 0, 1);
  const QMat b = QMat::unit(4, 0, 2);
  const QMat c = QMat::unit(4, 0, 3);
  CHECK_THROWS_WITH_AS(symplectic_basis_extract({a, b, c}), "derived algebra has dimension 0",
                       std::invalid_argument);
  CHECK_THROWS_AS(symplectic_basis_extract({QMat::identity(3)}), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_basis_extract({a, b}), std::invalid_argument);  // even dimension
}

TEST_CASE("extraction recovers reps from scrambled spanning sets") {
  Rng rng(24);
  for (int n = 1; n <= 2; ++n) {
    const HeisenbergProjAction h = build_example(n, n);
    std::vector<QMat> scrambled;
    // random invertible recombination of the basis plus central shifts
    for (const QMat& x : h.rep.X) scrambled.push_back(x + h.rep.t_mat.scaled(rng.small_rat()));
    scrambled.push_back(h.rep.t_mat);
    scrambled.push_back(h.rep.X[0] + h.rep.X[n % (2 * n)]);
    const HeisenbergMatRep rep = symplectic_basis_extract(scrambled);
    CHECK(rep.n == n);
    CHECK(rep.bracket_table() == SymplecticSpace::standard_omega(n));
  }
}

TEST_CASE("rep-level group identities") {
  Rng rng(25);
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k) {
      const HeisenbergMatRep rep = build_example(n, k).rep;
      for (int trial = 0; trial < 5; ++trial) {
        const auto a = random_heisenberg_element(n, rng);
        const auto b = random_heisenberg_element(n, rng);
        // exp is a homomorphism for the exact group law
        CHECK(rep.group_matrix(a) * rep.group_matrix(b) == rep.group_matrix(group_mul(a, b, rep.omega)));
        // the central parameter commutes with everything at group level
        const QMat central = exp_nilpotent(rep.t_mat.scaled(rng.small_rat()));
        const QMat ga = rep.group_matrix(a);
        CHECK(central * ga == ga * central);
        // truncated BCH is exact here: [A,B] is central and kills both
        const QMat ma = rep.element_matrix(a);
        const QMat mb = rep.element_matrix(b);
        const QMat br = commutator(ma, mb);
        CHECK((br * ma).is_zero());
        CHECK(exp_nilpotent(ma) * exp_nilpotent(mb) ==
              exp_nilpotent(ma + mb + br.scaled(rat(1, 2))));
      }
    }
}
