#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heis/instances.hpp"

namespace heis {

enum class CheckStatus { pass, fail, inconclusive };

struct CheckReport {
  std::string check;
  std::string instance;
  CheckStatus status = CheckStatus::fail;
  nlohmann::json witness;  // violating data; null on pass
  long long wall_time_ms = 0;
};

struct SuiteOptions {
  std::vector<std::string> checks;  // empty selects every known check
  int n_min = 1;
  int n_max = 3;
  std::uint64_t seed = 37u;
  // sample sizes; defaults match the acceptance suite
  int random_algebras = 50;
  int random_matrices = 100;
  int reference_samples = 20;
  int diagram_samples = 20;
  int family_labels = 20;
};

const std::vector<std::string>& known_checks();

// Runs the selected named checks deterministically: each (check, n) pair
// draws from its own stream seeded by (seed, check name, n), so results do
// not depend on which other checks were selected. Throws on unknown names.
std::vector<CheckReport> run_suite(const SuiteOptions& opts);

bool all_passed(const std::vector<CheckReport>& reports);

// Report document; timing fields are omitted when include_timing is false so
// that identical command + seed produces a byte-identical file.
nlohmann::json report_to_json(const std::vector<CheckReport>& reports, const SuiteOptions& opts,
                              bool include_timing);

std::string status_name(CheckStatus s);

}  // namespace heis
