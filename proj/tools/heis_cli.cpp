// Command-line driver: builds paper-family instances, runs the named check
// suite, and emits machine-verifiable certificates.
//
// Exit codes: 0 success / all checks passed, 1 check failure, 2 usage or
// input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "heis/checks.hpp"
#include "heis/json_io.hpp"

namespace {

using heis::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
  out << j.dump(2) << "\n";
}

// Accepts either a full Heisenberg structure file or a bare rep; a bare rep
// is framed with the standard boundary/reference convention.
heis::HeisenbergProjAction load_action(const std::string& path) {
  const json j = read_json_file(path);
  if (j.contains("rep")) return heis::heis_action_from_json(j);
  return heis::standard_frame(heis::rep_from_json(j));
}

std::vector<heis::Rat> parse_labels(const std::string& csv) {
  std::vector<heis::Rat> labels;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) labels.push_back(heis::rat_parse(tok));
  if (labels.empty()) throw std::invalid_argument("empty label list");
  return labels;
}

json family_document(int n, const std::vector<heis::Rat>& labels) {
  const auto family = heis::generate_family(n, labels);
  json members = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto [rep, loc] = heis::algebra_from_structure_matrix(family[i]);
    const heis::HeisenbergProjAction action = heis::standard_frame(rep);
    members.push_back(json{{"label", heis::rat_str(labels[i])},
                           {"structure_matrix", heis::structure_matrix_to_json(family[i])},
                           {"invariant", heis::coeffs_to_json(heis::symplectic_invariant(family[i]))},
                           {"algebra", heis::local_algebra_to_json(loc)},
                           {"action", heis::heis_action_to_json(action)}});
  }
  json certs = json::array();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto cert = heis::certify_inequivalent(family[i], family[j]);
      if (!heis::reverify_certificate(cert))
        throw std::runtime_error("certificate replay failed; refusing to emit");
      json c = heis::certificate_to_json(cert);
      c["pair"] = json::array({static_cast<int>(i), static_cast<int>(j)});
      certs.push_back(std::move(c));
    }
  return json{{"n", n},
              {"labels", heis::vec_to_json(labels)},
              {"members", std::move(members)},
              {"certificates", std::move(certs)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for Heisenberg group structures on odd projective space"};
  app.require_subcommand(1);

  int n = 1, k = 0;
  std::string in_path, left_path, right_path, out_path, labels_csv, suite_csv = "all",
              n_range = "1..3", report_path;
  int label_count = 0;
  std::uint64_t seed = 37;
  bool no_timing = false;

  auto* sc_build = app.add_subcommand("build-example", "construct the closed-form example family");
  sc_build->add_option("--n", n, "half-dimension")->required();
  sc_build->add_option("--k", k, "number of deepened generators, 0 <= k <= n")->required();
  sc_build->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_closure = app.add_subcommand("closure", "generated algebra and its local anatomy");
  sc_closure->add_option("--in", in_path, "Heisenberg structure or rep JSON")->required();
  sc_closure->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_descend = app.add_subcommand("descend", "induced additive action on the quotient");
  sc_descend->add_option("--in", in_path, "Heisenberg structure or rep JSON")->required();
  sc_descend->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_taut = app.add_subcommand("taut-from-matrix", "realize a structure matrix");
  sc_taut->add_option("--in", in_path, "structure matrix JSON")->required();
  sc_taut->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_inv = app.add_subcommand("invariant", "congruence invariant of a structure matrix");
  sc_inv->add_option("--in", in_path, "structure matrix JSON")->required();
  sc_inv->add_option("--out", out_path, "output file (default stdout)");

  long witness_budget = 0;
  auto* sc_certify = app.add_subcommand("certify", "inequivalence certificate for a pair");
  sc_certify->add_option("--left", left_path, "structure matrix JSON")->required();
  sc_certify->add_option("--right", right_path, "structure matrix JSON")->required();
  sc_certify->add_option("--witness-budget", witness_budget,
                         "on an undistinguished pair, search this many candidates for an "
                         "equivalence witness (absence is inconclusive, never a verdict)");
  sc_certify->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_family = app.add_subcommand("certify-family", "pairwise-certified family");
  sc_family->add_option("--n", n, "half-dimension")->required();
  sc_family->add_option("--labels", labels_csv, "comma-separated positive labels");
  sc_family->add_option("--count", label_count, "use labels 1..count");
  sc_family->add_option("--out", out_path, "output file (default stdout)");

  auto* sc_verify = app.add_subcommand("verify", "run named checks");
  sc_verify->add_option("--suite", suite_csv, "comma-separated check names, or 'all'");
  sc_verify->add_option("--n-range", n_range, "A..B (default 1..3)");
  sc_verify->add_option("--seed", seed, "seed for randomized instances");
  sc_verify->add_option("--report", report_path, "write the JSON report here");
  sc_verify->add_flag("--no-timing", no_timing, "omit wall times for byte-identical reports");
  sc_verify->add_flag("--list", "list known check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sc_build->parsed()) {
      emit(heis::heis_action_to_json(heis::build_example(n, k)), out_path);
    } else if (sc_closure->parsed()) {
      const auto h = load_action(in_path);
      emit(heis::local_algebra_to_json(heis::local_anatomy(h.generated_algebra())), out_path);
    } else if (sc_descend->parsed()) {
      emit(heis::descent_to_json(heis::descend_action(load_action(in_path))), out_path);
    } else if (sc_taut->parsed()) {
      const auto sm = heis::structure_matrix_from_json(read_json_file(in_path));
      const auto [rep, loc] = heis::algebra_from_structure_matrix(sm);
      emit(json{{"structure_matrix", heis::structure_matrix_to_json(sm)},
                {"rep", heis::rep_to_json(rep)},
                {"algebra", heis::local_algebra_to_json(loc)},
                {"action", heis::heis_action_to_json(heis::standard_frame(rep))}},
           out_path);
    } else if (sc_inv->parsed()) {
      const auto sm = heis::structure_matrix_from_json(read_json_file(in_path));
      emit(json{{"n", sm.n()}, {"invariant", heis::coeffs_to_json(heis::symplectic_invariant(sm))}},
           out_path);
    } else if (sc_certify->parsed()) {
      const auto left = heis::structure_matrix_from_json(read_json_file(left_path));
      const auto right = heis::structure_matrix_from_json(read_json_file(right_path));
      const auto cert = heis::certify_inequivalent(left, right);
      json out = heis::certificate_to_json(cert);
      if (!cert.inequivalent && witness_budget > 0) {
        const auto w = heis::equivalence_witness(left, right, witness_budget);
        if (w) {
          out["equivalence_witness"] = heis::mat_to_json(*w);
          out["witness_search"] = "found";
        } else {
          out["witness_search"] = "inconclusive";  // budget exhausted, not a verdict
        }
      }
      emit(out, out_path);
    } else if (sc_family->parsed()) {
      if (labels_csv.empty() && label_count <= 0)
        throw std::invalid_argument("certify-family needs --labels or --count");
      std::vector<heis::Rat> labels;
      if (!labels_csv.empty()) {
        labels = parse_labels(labels_csv);
      } else {
        for (int i = 1; i <= label_count; ++i) labels.push_back(heis::Rat(i));
      }
      if (labels.size() < 2) throw std::invalid_argument("a family needs at least two labels");
      emit(family_document(n, labels), out_path);
    } else if (sc_verify->parsed()) {
      if (sc_verify->count("--list") > 0) {
        for (const auto& name : heis::known_checks()) std::cout << name << "\n";
        return 0;
      }
      heis::SuiteOptions opts;
      opts.seed = seed;
      const auto dots = n_range.find("..");
      if (dots == std::string::npos)
        throw std::invalid_argument("--n-range must look like A..B");
      opts.n_min = std::stoi(n_range.substr(0, dots));
      opts.n_max = std::stoi(n_range.substr(dots + 2));
      if (suite_csv != "all" && !suite_csv.empty()) {
        std::stringstream ss(suite_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) opts.checks.push_back(tok);
      }
      const auto reports = heis::run_suite(opts);
      for (const auto& r : reports)
        std::cout << "[" << heis::status_name(r.status) << "] " << r.check << ": " << r.instance
                  << "\n";
      if (!report_path.empty())
        emit(heis::report_to_json(reports, opts, !no_timing), report_path);
      const bool ok = heis::all_passed(reports);
      std::cout << (ok ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
