#include "heis/checks.hpp"

#include <chrono>
#include <functional>
#include <nlohmann/json.hpp>

#include "heis/json_io.hpp"

namespace heis {

namespace {

using nlohmann::json;

struct Failure {
  std::string reason;
  json witness = nullptr;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rng make_rng(const SuiteOptions& opts, const std::string& check, int n) {
  return Rng(opts.seed ^ fnv1a(check) ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(n + 1)));
}

CheckReport timed(const std::string& check, const std::string& instance,
                  const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r{check, instance, CheckStatus::pass, nullptr, 0};
  try {
    body();
  } catch (const Failure& f) {
    r.status = CheckStatus::fail;
    r.witness = f.witness.is_null() ? json::object() : f.witness;
    r.witness["reason"] = f.reason;
  } catch (const std::exception& e) {
    r.status = CheckStatus::fail;
    r.witness = json{{"reason", e.what()}};
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); }

// ---- check bodies ----------------------------------------------------

void check_heisenberg_relations(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "heisenberg-relations", n);
    out.push_back(timed("heisenberg-relations", "example family, n=" + std::to_string(n), [&] {
      for (int k = 0; k <= n; ++k) {
        const HeisenbergProjAction h = build_example(n, k);  // validate() checks the relations
        if (h.rep.bracket_table() != SymplecticSpace::standard_omega(n))
          throw Failure{"bracket table differs from the standard form at " + nk(n, k)};
        // exp is a group homomorphism: exp(a) exp(b) = exp(a * b)
        for (int trial = 0; trial < 5; ++trial) {
          const HeisenbergElement a = random_heisenberg_element(n, rng);
          const HeisenbergElement b = random_heisenberg_element(n, rng);
          const QMat lhs = h.rep.group_matrix(a) * h.rep.group_matrix(b);
          const QMat rhs = h.rep.group_matrix(group_mul(a, b, h.rep.omega));
          if (lhs != rhs)
            throw Failure{"exp fails the group law at " + nk(n, k),
                          json{{"lhs", mat_to_json(lhs)}, {"rhs", mat_to_json(rhs)}}};
        }
      }
    }));
  }
}

void check_group_law_associativity(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "group-law-associativity", n);
    out.push_back(timed("group-law-associativity",
                        "30 random triples, n=" + std::to_string(n), [&] {
      const SymplecticSpace sp = SymplecticSpace::standard(n);
      for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_heisenberg_element(n, rng);
        const auto b = random_heisenberg_element(n, rng);
        const auto c = random_heisenberg_element(n, rng);
        if (!(group_mul(group_mul(a, b, sp), c, sp) == group_mul(a, group_mul(b, c, sp), sp)))
          throw Failure{"associativity fails",
                        json{{"a", vec_to_json(a.w)}, {"b", vec_to_json(b.w)}, {"c", vec_to_json(c.w)}}};
        const auto e = group_mul(a, group_inverse(a), sp);
        if (!vec_is_zero(e.w) || e.t != 0) throw Failure{"inverse fails"};
      }
    }));
  }
}

void check_algebra_closure_soundness(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "algebra-closure-soundness", n);
    out.push_back(timed("algebra-closure-soundness",
                        "example + random tautological algebras, n=" + std::to_string(n), [&] {
      std::vector<MatAlgebra> algebras;
      for (int k = 0; k <= n; ++k) algebras.push_back(build_example(n, k).generated_algebra());
      for (int trial = 0; trial < 3; ++trial)
        algebras.push_back(random_tautological_instance(n, rng).loc.algebra);
      for (const MatAlgebra& a : algebras)
        for (const QMat& x : a.basis())
          for (const QMat& y : a.basis()) {
            const QMat p = x * y;
            const QVec coords = a.coordinates(p);  // throws if outside the span
            QMat rec(a.ambient_size(), a.ambient_size());
            for (std::size_t i = 0; i < coords.size(); ++i)
              if (coords[i] != 0) rec = rec + a.basis()[i].scaled(coords[i]);
            if (rec != p) throw Failure{"re-expressed product has nonzero residual"};
          }
    }));
  }
}

void check_example_dimension(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n)
    for (int k = 0; k <= n; ++k)
      out.push_back(timed("example-dimension", nk(n, k), [&] {
        const int dim = build_example(n, k).generated_algebra().dim();
        if (dim != 2 * n + 2 + k)
          throw Failure{"dim = " + std::to_string(dim) + ", expected " + std::to_string(2 * n + 2 + k)};
      }));
}

void check_dim_bounds(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n)
    out.push_back(timed("dim-bounds", "k = 0.." + std::to_string(n) + ", n=" + std::to_string(n), [&] {
      bool lower_attained = false, upper_attained = false;
      for (int k = 0; k <= n; ++k) {
        const int dim = build_example(n, k).generated_algebra().dim();
        if (dim < 2 * n + 2 || dim > 3 * n + 2)
          throw Failure{"dim " + std::to_string(dim) + " violates [2n+2, 3n+2] at " + nk(n, k)};
        lower_attained |= dim == 2 * n + 2;
        upper_attained |= dim == 3 * n + 2;
      }
      if (!lower_attained || !upper_attained) throw Failure{"bounds not attained"};
    }));
}

void check_lemma_center(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "lemma-center", n);
    out.push_back(timed("lemma-center",
                        std::to_string(o.random_algebras) + " random tautological algebras + examples, n=" +
                            std::to_string(n), [&] {
      auto verify = [](const LocalAlgebra& loc, const QMat& t) {
        const int d = loc.ambient_size();
        for (const QMat& m : loc.ideal_basis())
          if (!(t * m).is_zero() || !(m * t).is_zero())
            throw Failure{"premise t m = m t = 0 fails", json{{"t", mat_to_json(t)}, {"m", mat_to_json(m)}}};
        const Subspace msq = ideal_power(loc, 2);
        if (!loc.center.contains(msq))
          throw Failure{"m^2 not contained in the center",
                        json{{"m2", static_cast<int>(msq.dim())}, {"center", static_cast<int>(loc.center.dim())},
                             {"d", d}}};
      };
      for (int i = 0; i < o.random_algebras; ++i) {
        const auto inst = random_tautological_instance(n, rng);
        verify(inst.loc, inst.rep.t_mat);
      }
      for (int k = 0; k <= n; ++k) {
        const HeisenbergProjAction h = build_example(n, k);
        verify(local_anatomy(h.generated_algebra()), h.rep.t_mat);
      }
    }));
  }
}

void check_lemma_kernel_ev(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "lemma-kernel-ev", n);
    out.push_back(timed("lemma-kernel-ev",
                        "ker(ev) on random tautological algebras + examples, n=" + std::to_string(n), [&] {
      auto verify = [n](const LocalAlgebra& loc, const QVec& ref, int expected_dim) {
        const Subspace ker = evaluation_kernel(loc, ref);
        if (expected_dim >= 0 && ker.dim() != expected_dim)
          throw Failure{"ker(ev) has dim " + std::to_string(ker.dim()) + ", expected " +
                        std::to_string(expected_dim)};
        if (ker.dim() > n) throw Failure{"ker(ev) exceeds n"};
        if (ker.intersect(loc.center).dim() != 0)
          throw Failure{"ker(ev) meets the center nontrivially"};
      };
      for (int i = 0; i < o.random_algebras; ++i) {
        const auto inst = random_tautological_instance(n, rng);
        verify(inst.loc, inst.action.reference_point, 0);
      }
      for (int k = 0; k <= n; ++k) {
        const HeisenbergProjAction h = build_example(n, k);
        verify(local_anatomy(h.generated_algebra()), h.reference_point, k);
      }
    }));
  }
}

void check_fixed_direction_independence(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "fixed-direction-independence", n);
    out.push_back(timed("fixed-direction-independence",
                        std::to_string(o.reference_samples) + " random reference points, n=" +
                            std::to_string(n), [&] {
      std::vector<HeisenbergProjAction> hs;
      for (int k = 0; k <= n; ++k) hs.push_back(build_example(n, k));
      hs.push_back(random_tautological_instance(n, rng).action);
      for (const HeisenbergProjAction& h : hs) {
        const QVec v = fixed_direction(h);
        for (int s = 0; s < o.reference_samples; ++s) {
          // a group translate stays on the open orbit
          HeisenbergProjAction moved = h;
          moved.reference_point =
              h.rep.group_matrix(random_heisenberg_element(n, rng)).apply(h.reference_point);
          if (fixed_direction(moved) != v)
            throw Failure{"fixed direction moved with the reference point",
                          json{{"v", vec_to_json(v)}, {"v2", vec_to_json(fixed_direction(moved))}}};
          // and the proof mechanism: shifts along the boundary do not even change t * o
          QVec shift(h.rep.d, Rat(0));
          for (int b = 0; b < h.boundary.dim(); ++b)
            shift = vec_add(shift, vec_scaled(h.boundary.basis_vector(b), rng.small_rat()));
          if (h.rep.t_mat.apply(vec_add(h.reference_point, shift)) !=
              h.rep.t_mat.apply(h.reference_point))
            throw Failure{"t * (o + boundary shift) changed"};
        }
      }
    }));
  }
}

void check_central_triviality(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "central-triviality-on-quotient", n);
    out.push_back(timed("central-triviality-on-quotient", "examples + random, n=" + std::to_string(n), [&] {
      std::vector<HeisenbergProjAction> hs;
      for (int k = 0; k <= n; ++k) hs.push_back(build_example(n, k));
      hs.push_back(random_tautological_instance(n, rng).action);
      for (const HeisenbergProjAction& h : hs) {
        const DescentResult res = descend_action(h);
        if (!res.push(h.rep.t_mat).is_zero())
          throw Failure{"t has nonzero image on the quotient",
                        json{{"image", mat_to_json(res.push(h.rep.t_mat))}}};
      }
    }));
  }
}

void check_descent_diagram(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "descent-diagram", n);
    out.push_back(timed("descent-diagram",
                        std::to_string(o.diagram_samples) + " random (g, p) pairs, n=" + std::to_string(n), [&] {
      std::vector<HeisenbergProjAction> hs;
      for (int k = 0; k <= n; ++k) hs.push_back(build_example(n, k));
      hs.push_back(random_tautological_instance(n, rng).action);
      for (const HeisenbergProjAction& h : hs) {
        const DescentResult res = descend_action(h);
        for (int s = 0; s < o.diagram_samples; ++s) {
          const HeisenbergElement g = random_heisenberg_element(n, rng);
          QVec p(h.rep.d);
          for (auto& x : p) x = rng.small_rat();
          const QMat gm = h.rep.group_matrix(g);
          const QVec lhs = res.projection.apply(gm.apply(p));
          const QMat quotient_g = exp_nilpotent(res.push(h.rep.element_matrix(g)));
          const QVec rhs = quotient_g.apply(res.projection.apply(p));
          if (lhs != rhs)
            throw Failure{"descent diagram does not commute",
                          json{{"lhs", vec_to_json(lhs)}, {"rhs", vec_to_json(rhs)}}};
        }
      }
    }));
  }
}

void check_taut_iff_dim(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "taut-iff-dim", n);
    out.push_back(timed("taut-iff-dim", "examples k=0.." + std::to_string(n) + " + random, n=" +
                                            std::to_string(n), [&] {
      std::vector<HeisenbergProjAction> hs;
      for (int k = 0; k <= n; ++k) hs.push_back(build_example(n, k));
      hs.push_back(random_tautological_instance(n, rng).action);
      for (const HeisenbergProjAction& h : hs) {
        const int dim = h.generated_algebra().dim();
        const bool taut = descend_action(h).tautological;
        if ((dim == 2 * n + 2) != taut)
          throw Failure{"dim = " + std::to_string(dim) + " but tautological = " +
                        (taut ? "true" : "false")};
      }
    }));
  }
}

void check_structure_roundtrip(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "structure-roundtrip", n);
    out.push_back(timed("structure-roundtrip",
                        std::to_string(o.random_matrices) + " random structure matrices, n=" +
                            std::to_string(n), [&] {
      for (int i = 0; i < o.random_matrices; ++i) {
        const StructureMatrix m = random_structure_matrix(n, rng);
        const auto [rep, loc] = algebra_from_structure_matrix(m);
        for (int a = 0; a < 2 * n; ++a)
          for (int b = 0; b < 2 * n; ++b)
            if (rep.X[a] * rep.X[b] != rep.t_mat.scaled(m.M().at(a, b)))
              throw Failure{"X_i X_j != a_ij t", json{{"M", mat_to_json(m.M())}}};
        const StructureMatrix back = extract_structure_matrix(loc, rep);
        if (!(back == m))
          throw Failure{"extract(construct(M)) != M",
                        json{{"M", mat_to_json(m.M())}, {"back", mat_to_json(back.M())}}};
      }
    }));
  }
}

void check_f_bijection(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "F-bijection", n);
    out.push_back(timed("F-bijection",
                        std::to_string(o.random_matrices) + " random instances, n=" + std::to_string(n), [&] {
      const QMat half_omega = SymplecticSpace::standard_omega(n).scaled(rat(1, 2));
      for (int i = 0; i < o.random_matrices; ++i) {
        const QMat sym = random_symmetric(2 * n, rng);
        if (symmetric_part(sym + half_omega) != sym)
          throw Failure{"S(N + Omega/2) != N", json{{"N", mat_to_json(sym)}}};
        const StructureMatrix m = random_structure_matrix(n, rng);
        if (symmetric_part(m.M()) + half_omega != m.M())
          throw Failure{"S(M) + Omega/2 != M", json{{"M", mat_to_json(m.M())}}};
      }
    }));
  }
}

void check_invariance_oracle(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n) {
    Rng rng = make_rng(o, "invariance-oracle", n);
    out.push_back(timed("invariance-oracle",
                        std::to_string(o.random_matrices) + " random symplectic congruences, n=" +
                            std::to_string(n), [&] {
      const QMat omega = SymplecticSpace::standard_omega(n);
      for (int i = 0; i < o.random_matrices; ++i) {
        const StructureMatrix m = random_structure_matrix(n, rng);
        const QMat c = random_symplectic(n, rng);
        if (c * omega * c.transposed() != omega) throw Failure{"generator produced a non-symplectic C"};
        const StructureMatrix moved(n, c * m.M() * c.transposed());
        if (symplectic_invariant(moved) != symplectic_invariant(m))
          throw Failure{"invariant moved under a symplectic congruence",
                        json{{"M", mat_to_json(m.M())}, {"C", mat_to_json(c)}}};
        // planted-witness pairs are never certified inequivalent
        if (certify_inequivalent(m, moved).inequivalent)
          throw Failure{"planted congruence certified inequivalent"};
        // scalar relaxation k M = C M' C^t: rewrite k M to the Omega-normalized basis
        // via D = diag(I_n / k, I_n), which carries the skew part k Omega back to Omega
        const Rat k = rng.small_rat_nonzero(3, 2);
        QMat dscale = QMat::identity(2 * n);
        for (int a = 0; a < n; ++a) dscale.at(a, a) = Rat(1) / k;
        const StructureMatrix rescaled(n, dscale * m.M().scaled(k) * dscale.transposed());
        if (symplectic_invariant(rescaled) != symplectic_invariant(m))
          throw Failure{"scalar-relaxed invariant mismatch", json{{"k", rat_str(k)}}};
      }
    }));
  }
}

void check_family_certification(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = o.n_min; n <= o.n_max; ++n)
    out.push_back(timed("family-certification",
                        std::to_string(o.family_labels) + " labels, n=" + std::to_string(n), [&] {
      std::vector<Rat> labels;
      for (int i = 1; i <= o.family_labels; ++i) labels.push_back(Rat(i));
      const auto family = generate_family(n, labels);
      int certified = 0;
      for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
          const auto cert = certify_inequivalent(family[i], family[j]);
          if (!cert.inequivalent)
            throw Failure{"family pair not distinguished",
                          json{{"i", static_cast<int>(i)}, {"j", static_cast<int>(j)}}};
          if (!reverify_certificate(cert)) throw Failure{"certificate failed independent replay"};
          ++certified;
        }
      const int expected = o.family_labels * (o.family_labels - 1) / 2;
      if (certified != expected)
        throw Failure{"expected " + std::to_string(expected) + " certificates, got " +
                      std::to_string(certified)};
    }));
}

void check_ht_roundtrip(const SuiteOptions&, std::vector<CheckReport>& out) {
  const std::vector<std::vector<int>> shapes = {{1}, {2}, {3}, {4}, {5}, {2, 2}, {3, 2}};
  for (const auto& shape : shapes) {
    std::string name = "Q[";
    for (std::size_t i = 0; i < shape.size(); ++i) name += std::string(i ? "," : "") + char('x' + i);
    name += "]/(";
    for (std::size_t i = 0; i < shape.size(); ++i)
      name += std::string(i ? "," : "") + char('x' + i) + "^" + std::to_string(shape[i]);
    name += ")";
    out.push_back(timed("ht-roundtrip", name, [&] {
      const LocalAlgebra loc = truncated_polynomial_algebra(shape);
      const AdditiveProjAction act = algebra_to_action(loc);
      const LocalAlgebra back = action_to_algebra(act);
      if (back.algebra.dim() != loc.algebra.dim()) throw Failure{"round trip changed the dimension"};
      auto profile = [](const LocalAlgebra& l) {
        std::vector<int> dims;
        for (const auto& f : l.filtration) dims.push_back(f.dim());
        return dims;
      };
      if (profile(back) != profile(loc))
        throw Failure{"round trip changed the filtration profile"};
    }));
  }
}

void check_ht_remark(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = std::max(o.n_min, 1); n <= o.n_max; ++n) {
    const std::string note =
        n >= 3 ? "no Heisenberg preimage possible: m^(n+3) = 0 bound"
               : "bound m^(n+3) = 0 only obstructs for n >= 3";
    out.push_back(timed("ht-remark",
                        "Q[x]/(x^" + std::to_string(2 * n + 1) + ") at n=" + std::to_string(n) +
                            "; " + note, [&] {
      const LocalAlgebra b = truncated_polynomial_algebra({2 * n + 1});
      if (ideal_power(b, 2 * n).dim() == 0) throw Failure{"m^(2n) unexpectedly vanished"};
      if (ideal_power(b, 2 * n + 1).dim() != 0) throw Failure{"m^(2n+1) unexpectedly nonzero"};
      if (n >= 3 && ideal_power(b, n + 3).dim() == 0)
        throw Failure{"m^(n+3) vanished; obstruction computation is broken"};
    }));
  }
}

using CheckFn = void (*)(const SuiteOptions&, std::vector<CheckReport>&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"heisenberg-relations", check_heisenberg_relations},
      {"group-law-associativity", check_group_law_associativity},
      {"algebra-closure-soundness", check_algebra_closure_soundness},
      {"example-dimension", check_example_dimension},
      {"dim-bounds", check_dim_bounds},
      {"lemma-center", check_lemma_center},
      {"lemma-kernel-ev", check_lemma_kernel_ev},
      {"fixed-direction-independence", check_fixed_direction_independence},
      {"central-triviality-on-quotient", check_central_triviality},
      {"descent-diagram", check_descent_diagram},
      {"taut-iff-dim", check_taut_iff_dim},
      {"structure-roundtrip", check_structure_roundtrip},
      {"F-bijection", check_f_bijection},
      {"invariance-oracle", check_invariance_oracle},
      {"family-certification", check_family_certification},
      {"ht-roundtrip", check_ht_roundtrip},
      {"ht-remark", check_ht_remark},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckReport> run_suite(const SuiteOptions& opts) {
  if (opts.n_min < 1 || opts.n_max < opts.n_min)
    throw std::invalid_argument("need 1 <= n_min <= n_max");
  std::vector<std::string> selected = opts.checks;
  if (selected.empty()) selected = known_checks();
  std::vector<CheckReport> out;
  for (const std::string& name : selected) {
    bool found = false;
    for (const auto& [known, fn] : registry())
      if (known == name) {
        fn(opts, out);
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown check '" + name + "'");
  }
  return out;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "inconclusive";
  }
}

nlohmann::json report_to_json(const std::vector<CheckReport>& reports, const SuiteOptions& opts,
                              bool include_timing) {
  json checks = json::array();
  for (const auto& r : reports) {
    json e{{"check", r.check}, {"instance", r.instance}, {"status", status_name(r.status)}};
    if (!r.witness.is_null()) e["witness"] = r.witness;
    if (include_timing) e["wall_time_ms"] = r.wall_time_ms;
    checks.push_back(std::move(e));
  }
  return json{{"seed", opts.seed},
              {"n_range", json::array({opts.n_min, opts.n_max})},
              {"all_passed", all_passed(reports)},
              {"checks", std::move(checks)}};
}

}  // namespace heis
