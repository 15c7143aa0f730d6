#include <doctest.h>

#include <nlohmann/json.hpp>

#include "heis/instances.hpp"
#include "heis/json_io.hpp"

using namespace heis;
using nlohmann::json;

TEST_CASE("matrix JSON accepts both integer spellings and emits reduced fractions") {
  const json j = json::parse(R"({"rows":2,"cols":2,"entries":[["3/1","0"],["1/2","-4/6"]]})");
  const QMat m = mat_from_json(j);
  CHECK(m.at(0, 0) == Rat(3));
  CHECK(m.at(1, 1) == rat(-2, 3));
  const json out = mat_to_json(m);
  CHECK(out["entries"][0][0] == "3");     // no "/1"
  CHECK(out["entries"][1][1] == "-2/3");  // reduced
  CHECK(mat_from_json(out) == m);
}

TEST_CASE("malformed matrix JSON is rejected") {
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":1,"cols":2})")), std::invalid_argument);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["x"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(mat_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                  std::invalid_argument);
}

TEST_CASE("round trips through the repo-wide formats") {
  Rng rng(61);
  SUBCASE("random matrices") {
    for (int trial = 0; trial < 20; ++trial) {
      QMat m(3, 4);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = rng.small_rat(20, 9);
      CHECK(mat_from_json(mat_to_json(m)) == m);
    }
  }
  SUBCASE("rep and structure files") {
    const HeisenbergProjAction h = build_example(2, 1);
    const HeisenbergMatRep rep = rep_from_json(rep_to_json(h.rep));
    CHECK(rep.X == h.rep.X);
    CHECK(rep.t_mat == h.rep.t_mat);
    CHECK(!rep_to_json(h.rep).contains("omega"));  // standard form stays implicit

    const HeisenbergProjAction h2 = heis_action_from_json(heis_action_to_json(h));
    CHECK(h2.reference_point == h.reference_point);
    CHECK(h2.boundary == h.boundary);

    const StructureMatrix sm = random_structure_matrix(2, rng);
    CHECK(structure_matrix_from_json(structure_matrix_to_json(sm)) == sm);

    const auto cert = certify_inequivalent(generate_family(1, {Rat(1), Rat(2)})[0],
                                           generate_family(1, {Rat(1), Rat(2)})[1]);
    const InequivalenceCertificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.inequivalent == cert.inequivalent);
    CHECK(back.invariant_left == cert.invariant_left);
    CHECK(reverify_certificate(back));
  }
  SUBCASE("local algebra files") {
    const LocalAlgebra loc = local_anatomy(build_example(1, 1).generated_algebra());
    const json j = local_algebra_to_json(loc);
    const LocalAlgebra back = local_algebra_from_json(j);
    CHECK(back.algebra.dim() == loc.algebra.dim());
    CHECK(back.maximal_ideal == loc.maximal_ideal);
    CHECK(back.center == loc.center);

    json tampered = j;
    tampered["center"] = json::array();  // claims a trivial center
    CHECK_THROWS_AS(local_algebra_from_json(tampered), std::invalid_argument);
  }
}

TEST_CASE("action JSON validates on read") {
  const HeisenbergProjAction h = build_example(1, 0);
  json j = heis_action_to_json(h);
  j["reference_point"] = vec_to_json(QVec{Rat(1), Rat(0), Rat(0), Rat(0)});  // on the boundary
  CHECK_THROWS_AS(heis_action_from_json(j), std::invalid_argument);
}
