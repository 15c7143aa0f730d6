// Acceptance suite: every criterion prints one pass/fail line; the binary
// exits nonzero if any criterion fails. All comparisons are exact rational
// equality; the only tolerances are the stated wall-clock budgets.

#include <chrono>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "heis/checks.hpp"
#include "heis/json_io.hpp"

using namespace heis;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double run_ms(const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// criteria 1 + 2: example dimension formula and the bounds, n = 1..4
void criterion_dimensions() {
  bool formula_ok = true, bounds_ok = true;
  std::string detail;
  const double ms = run_ms([&] {
    for (int n = 1; n <= 4; ++n) {
      bool lower = false, upper = false;
      for (int k = 0; k <= n; ++k) {
        const int dim = build_example(n, k).generated_algebra().dim();
        if (dim != 2 * n + 2 + k) {
          formula_ok = false;
          detail = "dim(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(dim);
        }
        if (dim < 2 * n + 2 || dim > 3 * n + 2) bounds_ok = false;
        lower |= dim == 2 * n + 2;
        upper |= dim == 3 * n + 2;
      }
      if (!lower || !upper) bounds_ok = false;
    }
  });
  const bool in_budget = ms < 5000.0;
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << ms << " ms, budget 5000 ms";
  report(1, "example dimension formula 2n+2+k, n <= 4", formula_ok && in_budget,
         detail.empty() ? t.str() : detail);
  report(2, "dimension bounds [2n+2, 3n+2] with both endpoints attained", bounds_ok);
}

// criterion 3: k = 0 is exactly the tautological case
void criterion_tautological() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 4 && ok; ++n) {
    const HeisenbergProjAction h0 = build_example(n, 0);
    const LocalAlgebra loc0 = local_anatomy(h0.generated_algebra());
    const DescentResult d0 = descend_action(h0);
    if (!d0.tautological || loc0.algebra.dim() != 2 * n + 2 ||
        evaluation_kernel(loc0, h0.reference_point).dim() != 0) {
      ok = false;
      detail = "k=0 case broken at n=" + std::to_string(n);
    }
    for (int k = 1; k <= n && ok; ++k)
      if (descend_action(build_example(n, k)).tautological) {
        ok = false;
        detail = "k=" + std::to_string(k) + " descended tautologically at n=" + std::to_string(n);
      }
  }
  report(3, "tautological descent iff k = 0, with dim 2n+2 and ker(ev) = 0", ok, detail);
}

// criteria 4, 5, 6, 8, 9 run through the named check suite at the stated
// sample sizes (50 algebras, 100 matrices, 20 reference points, 20 pairs)
void criterion_suite(int id, const std::string& label, const std::vector<std::string>& checks) {
  SuiteOptions opts;
  opts.checks = checks;
  opts.n_min = 1;
  opts.n_max = 3;
  opts.seed = 20250810;
  opts.random_algebras = 50;
  opts.random_matrices = 100;
  opts.reference_samples = 20;
  opts.diagram_samples = 20;
  const auto reports = run_suite(opts);
  std::string detail;
  for (const auto& r : reports)
    if (r.status != CheckStatus::pass) detail += r.check + "@" + r.instance + "; ";
  report(id, label, all_passed(reports), detail);
}

// criterion 7: 20 labels -> 190 replayable pairwise certificates per n
void criterion_family() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 3 && ok; ++n) {
    int certified = 0;
    const double ms = run_ms([&] {
      std::vector<Rat> labels;
      for (int i = 1; i <= 20; ++i) labels.push_back(Rat(i));
      const auto family = generate_family(n, labels);
      for (std::size_t i = 0; i < family.size() && ok; ++i)
        for (std::size_t j = i + 1; j < family.size() && ok; ++j) {
          const auto cert = certify_inequivalent(family[i], family[j]);
          // replay from the serialized transcript, as a referee would
          const auto replayed = certificate_from_json(certificate_to_json(cert));
          if (!cert.inequivalent || !reverify_certificate(replayed)) {
            ok = false;
            detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ") at n=" +
                     std::to_string(n);
          }
          ++certified;
        }
    });
    if (ok && certified != 190) {
      ok = false;
      detail = "expected 190 certificates, got " + std::to_string(certified);
    }
    if (ok && ms >= 30000.0) {
      ok = false;
      detail = "n=" + std::to_string(n) + " took " + std::to_string(ms) + " ms, budget 30000 ms";
    }
  }
  report(7, "190 pairwise certificates per n in {1,2,3}, each replayable, < 30 s per n", ok, detail);
}

}  // namespace

int main() {
  criterion_dimensions();
  criterion_tautological();
  criterion_suite(4, "lemma suite on 50 seeded tautological algebras per n (exact)",
                  {"lemma-center", "lemma-kernel-ev", "fixed-direction-independence",
                   "descent-diagram"});
  criterion_suite(5, "structure-matrix round trip on 100 seeded matrices per n (bit-exact)",
                  {"structure-roundtrip"});
  criterion_suite(6, "invariance under 100 seeded symplectic congruences per n; planted pairs "
                     "never certified",
                  {"invariance-oracle"});
  criterion_family();
  criterion_suite(8, "F-bijection S(N + Omega/2) = N and S(M) + Omega/2 = M on 100 seeded instances",
                  {"F-bijection"});
  criterion_suite(9, "HT round trip preserves dimension and filtration profile",
                  {"ht-roundtrip"});

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
