#include <doctest.h>

#include "heis/instances.hpp"

using namespace heis;

namespace {

std::vector<int> filtration_profile(const LocalAlgebra& loc) {
  std::vector<int> dims;
  for (const auto& f : loc.filtration) dims.push_back(f.dim());
  return dims;
}

}  // namespace

TEST_CASE("tautological action of Q[x]/(x^2)") {
  const LocalAlgebra loc = truncated_polynomial_algebra({2});
  const AdditiveProjAction act = algebra_to_action(loc);
  CHECK(act.n == 1);
  CHECK(act.d == 2);
  CHECK(is_tautological(act));
  // one step of the flow adds a multiple of the x-direction to the unit
  const QMat g = exp_nilpotent(act.generators[0].scaled(Rat(5)));
  const QVec moved = g.apply(act.reference_point);
  const QVec xdir = act.generators[0].apply(act.reference_point);
  CHECK(moved == vec_add(act.reference_point, vec_scaled(xdir, Rat(5))));
}

TEST_CASE("tautological action of the one-point algebra") {
  const AdditiveProjAction act = algebra_to_action(truncated_polynomial_algebra({1}));
  CHECK(act.n == 0);
  CHECK(act.d == 1);
}

TEST_CASE("Q[x]/(x^3) has a dense orbit but is not tautological") {
  const LocalAlgebra loc = truncated_polynomial_algebra({3});
  const AdditiveProjAction act = algebra_to_action(loc);
  CHECK(act.d == 3);
  CHECK(!is_tautological(act));

  const LocalAlgebra back = action_to_algebra(act);
  CHECK(back.algebra.dim() == 3);
  CHECK(filtration_profile(back) == filtration_profile(loc));
}

TEST_CASE("algebra_to_action rejects non-commutative input") {
  const LocalAlgebra loc = local_anatomy(build_example(1, 0).generated_algebra());
  CHECK(!loc.is_commutative());
  CHECK_THROWS_AS(algebra_to_action(loc), std::invalid_argument);
}

TEST_CASE("action_to_algebra on the translation structure") {
  const int d = 3;  // P^2 with two translations
  AdditiveProjAction act;
  act.n = 2;
  act.d = d;
  act.generators = {QMat::unit(d, 0, 2), QMat::unit(d, 1, 2)};
  act.reference_point = QVec{Rat(0), Rat(0), Rat(1)};
  CHECK(is_tautological(act));
  const LocalAlgebra loc = action_to_algebra(act);
  CHECK(loc.algebra.dim() == 3);
  CHECK(ideal_power(loc, 2).dim() == 0);
}

TEST_CASE("a single nilpotent generator closes to a dim-2 local algebra") {
  AdditiveProjAction act;
  act.n = 1;
  act.d = 2;
  act.generators = {QMat::unit(2, 0, 1)};
  act.reference_point = QVec{Rat(0), Rat(1)};
  CHECK(action_to_algebra(act).algebra.dim() == 2);
}

TEST_CASE("validation rejects broken additive actions") {
  AdditiveProjAction act;
  act.n = 2;
  act.d = 3;
  act.generators = {QMat::unit(3, 0, 2), QMat::unit(3, 0, 2)};  // dependent
  act.reference_point = QVec{Rat(0), Rat(0), Rat(1)};
  CHECK_THROWS_AS(act.validate(), std::invalid_argument);

  act.generators = {QMat::unit(3, 0, 2), QMat::unit(3, 1, 0)};  // not commuting
  CHECK_THROWS_AS(act.validate(), std::invalid_argument);

  act.generators = {QMat::unit(3, 0, 2), QMat::identity(3)};  // not nilpotent
  CHECK_THROWS_AS(act.validate(), std::invalid_argument);

  act.generators = {QMat::unit(3, 0, 2), QMat::unit(3, 1, 2)};
  act.reference_point = QVec{Rat(1), Rat(0), Rat(0)};  // orbit not dense
  CHECK_THROWS_AS(act.validate(), std::invalid_argument);
}

TEST_CASE("boundary fixing and the fixed direction") {
  for (int n = 1; n <= 3; ++n) {
    const HeisenbergProjAction h = build_example(n, 0);
    CHECK(boundary_fixed_check(h));

    QVec e0(h.rep.d, Rat(0));
    e0[0] = 1;
    CHECK(fixed_direction(h) == e0);

    SUBCASE("scaling or boundary shifts never move it") {
      HeisenbergProjAction scaled = h;
      scaled.reference_point = vec_scaled(h.reference_point, Rat(7));
      CHECK(fixed_direction(scaled) == e0);

      HeisenbergProjAction shifted = h;
      shifted.reference_point = vec_add(h.reference_point, h.boundary.basis_vector(1));
      CHECK(fixed_direction(shifted) == e0);
    }
  }
}

TEST_CASE("a boundary the center moves is detected") {
  const HeisenbergProjAction h = build_example(1, 0);
  HeisenbergProjAction wrong = h;
  std::vector<QVec> vectors;
  for (int i = 1; i < h.rep.d; ++i) {
    QVec e(h.rep.d, Rat(0));
    e[i] = 1;
    vectors.push_back(std::move(e));
  }
  wrong.boundary = Subspace::from_vectors(h.rep.d, vectors);  // {first coordinate = 0}
  CHECK(!boundary_fixed_check(wrong));                        // t e_{2n+2} = e_1 != 0
  CHECK_THROWS_AS(fixed_direction(wrong), std::invalid_argument);
}

TEST_CASE("descent of the closed-form family") {
  SUBCASE("k = 0 descends to translations") {
    for (int n = 1; n <= 3; ++n) {
      const DescentResult res = descend_action(build_example(n, 0));
      CHECK(res.tautological);
      CHECK(res.quotient_action.n == 2 * n);
      CHECK(res.quotient_action.d == 2 * n + 1);
      CHECK(res.dropped_coordinate == 0);
    }
  }
  SUBCASE("k >= 1 does not") {
    CHECK(!descend_action(build_example(1, 1)).tautological);
    CHECK(!descend_action(build_example(2, 2)).tautological);
  }
  SUBCASE("the center always dies on the quotient") {
    const HeisenbergProjAction h = build_example(2, 1);
    const DescentResult res = descend_action(h);
    CHECK(res.push(h.rep.t_mat).is_zero());
  }
}

TEST_CASE("descent diagram commutes pointwise") {
  Rng rng(41);
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= n; ++k) {
      const HeisenbergProjAction h = build_example(n, k);
      const DescentResult res = descend_action(h);
      for (int trial = 0; trial < 10; ++trial) {
        const HeisenbergElement g = random_heisenberg_element(n, rng);
        QVec p(h.rep.d);
        for (auto& x : p) x = rng.small_rat();
        const QVec lhs = res.projection.apply(h.rep.group_matrix(g).apply(p));
        const QVec rhs =
            exp_nilpotent(res.push(h.rep.element_matrix(g))).apply(res.projection.apply(p));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("is_tautological is invariant under conjugation") {
  Rng rng(42);
  AdditiveProjAction act;
  act.n = 2;
  act.d = 3;
  act.generators = {QMat::unit(3, 0, 2), QMat::unit(3, 1, 2)};
  act.reference_point = QVec{Rat(0), Rat(0), Rat(1)};
  for (int trial = 0; trial < 10; ++trial) {
    QMat upper = QMat::identity(3), lower = QMat::identity(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (j > i) upper.at(i, j) = rng.small_rat(2, 2);
        if (j < i) lower.at(i, j) = rng.small_rat(2, 2);
      }
    const QMat p = upper * lower;
    const QMat pinv = inverse(p);
    AdditiveProjAction moved;
    moved.n = act.n;
    moved.d = act.d;
    for (const QMat& g : act.generators) moved.generators.push_back(p * g * pinv);
    moved.reference_point = p.apply(act.reference_point);
    moved.validate();
    CHECK(is_tautological(moved));
  }
}

TEST_CASE("evaluation kernel dimensions") {
  Rng rng(43);
  SUBCASE("tautological algebras have trivial kernel") {
    for (int n = 1; n <= 2; ++n) {
      const auto inst = random_tautological_instance(n, rng);
      CHECK(evaluation_kernel(inst.loc, inst.action.reference_point).dim() == 0);
    }
  }
  SUBCASE("the k-family has kernel of dimension k") {
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        const HeisenbergProjAction h = build_example(n, k);
        const LocalAlgebra loc = local_anatomy(h.generated_algebra());
        const Subspace ker = evaluation_kernel(loc, h.reference_point);
        CHECK(ker.dim() == k);
        CHECK(ker.intersect(loc.center).dim() == 0);
      }
  }
  SUBCASE("non-dense references are rejected") {
    const HeisenbergProjAction h = build_example(1, 0);
    const LocalAlgebra loc = local_anatomy(h.generated_algebra());
    QVec bad(h.rep.d, Rat(0));
    bad[0] = 1;  // the fixed direction has a tiny orbit
    CHECK_THROWS_AS(evaluation_kernel(loc, bad), std::invalid_argument);
  }
}

TEST_CASE("HT round trip preserves dimension and filtration profile") {
  const std::vector<std::vector<int>> shapes = {{2}, {3}, {4}, {5}, {2, 2}, {3, 2}};
  for (const auto& shape : shapes) {
    const LocalAlgebra loc = truncated_polynomial_algebra(shape);
    const LocalAlgebra back = action_to_algebra(algebra_to_action(loc));
    CHECK(back.algebra.dim() == loc.algebra.dim());
    CHECK(filtration_profile(back) == filtration_profile(loc));
  }
}

TEST_CASE("dimension bounds characterize tautological descent") {
  Rng rng(44);
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= n; ++k) {
      const HeisenbergProjAction h = build_example(n, k);
      const int dim = h.generated_algebra().dim();
      CHECK(dim >= 2 * n + 2);
      CHECK(dim <= 3 * n + 2);
      CHECK((dim == 2 * n + 2) == descend_action(h).tautological);
    }
    const auto inst = random_tautological_instance(n, rng);
    CHECK(inst.loc.algebra.dim() == 2 * n + 2);
    CHECK(descend_action(inst.action).tautological);
  }
}
