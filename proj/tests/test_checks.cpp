#include <doctest.h>

#include <nlohmann/json.hpp>

#include "heis/checks.hpp"
#include "heis/json_io.hpp"

using namespace heis;

namespace {

SuiteOptions quick_options() {
  SuiteOptions o;
  o.n_min = 1;
  o.n_max = 2;
  o.seed = 99;
  o.random_algebras = 3;
  o.random_matrices = 5;
  o.reference_samples = 3;
  o.diagram_samples = 3;
  o.family_labels = 4;
  return o;
}

}  // namespace

TEST_CASE("every named check passes at reduced sample sizes") {
  const auto reports = run_suite(quick_options());
  for (const auto& r : reports) {
    INFO(r.check << ": " << r.instance << " -> " << r.witness.dump());
    CHECK(r.status == CheckStatus::pass);
  }
  CHECK(all_passed(reports));
  // every known check contributed at least one report
  for (const auto& name : known_checks()) {
    bool seen = false;
    for (const auto& r : reports) seen |= r.check == name;
    CHECK_MESSAGE(seen, name);
  }
}

TEST_CASE("unknown check names are rejected") {
  SuiteOptions o = quick_options();
  o.checks = {"no-such-check"};
  CHECK_THROWS_AS(run_suite(o), std::invalid_argument);
}

TEST_CASE("reports are byte-identical for identical seeds") {
  SuiteOptions o = quick_options();
  o.checks = {"lemma-center", "invariance-oracle", "structure-roundtrip"};
  const auto a = run_suite(o);
  const auto b = run_suite(o);
  CHECK(report_to_json(a, o, false).dump() == report_to_json(b, o, false).dump());
}

TEST_CASE("check results are independent of the selection around them") {
  SuiteOptions lone = quick_options();
  lone.checks = {"structure-roundtrip"};
  SuiteOptions bundled = quick_options();
  bundled.checks = {"lemma-center", "structure-roundtrip"};
  const auto a = run_suite(lone);
  const auto b = run_suite(bundled);
  json ja = json::array(), jb = json::array();
  for (const auto& r : a)
    if (r.check == "structure-roundtrip") ja.push_back(report_to_json({r}, lone, false));
  for (const auto& r : b)
    if (r.check == "structure-roundtrip") jb.push_back(report_to_json({r}, bundled, false));
  CHECK(ja.dump() == jb.dump());
}
