#include "heis/json_io.hpp"

#include <nlohmann/json.hpp>

namespace heis {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing key '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("key '") + key + "' must be an integer");
  return v.get<int>();
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw std::invalid_argument("rational entries must be fraction strings");
}

std::vector<QMat> mat_list_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of matrices");
  std::vector<QMat> out;
  for (const auto& e : j) out.push_back(mat_from_json(e));
  return out;
}

json mat_list_to_json(const std::vector<QMat>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(mat_to_json(m));
  return out;
}

Subspace subspace_from_matrices(const json& j, int d) {
  return span_close_shaped(d, d, mat_list_from_json(j));
}

json subspace_to_matrices(const Subspace& s, int d) {
  return mat_list_to_json(subspace_matrices(s, d, d));
}

}  // namespace

json mat_to_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

QMat mat_from_json(const json& j) {
  const int rows = require_int(j, "rows");
  const int cols = require_int(j, "cols");
  const json& entries = require(j, "entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw std::invalid_argument("entries must have 'rows' rows");
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("entry row has wrong length");
    for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(row.at(c));
  }
  return m;
}

json vec_to_json(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rat_str(x));
  return out;
}

QVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  QVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json coeffs_to_json(const std::vector<Rat>& coeffs) { return vec_to_json(coeffs); }
std::vector<Rat> coeffs_from_json(const json& j) { return vec_from_json(j); }

json rep_to_json(const HeisenbergMatRep& rep) {
  json out{{"n", rep.n}, {"d", rep.d}, {"X", mat_list_to_json(rep.X)}, {"t", mat_to_json(rep.t_mat)}};
  if (!rep.omega.is_standard()) out["omega"] = mat_to_json(rep.omega.omega());
  return out;
}

HeisenbergMatRep rep_from_json(const json& j) {
  HeisenbergMatRep rep;
  rep.n = require_int(j, "n");
  rep.d = require_int(j, "d");
  rep.X = mat_list_from_json(require(j, "X"));
  rep.t_mat = mat_from_json(require(j, "t"));
  rep.omega = j.contains("omega") ? SymplecticSpace(rep.n, mat_from_json(j.at("omega")))
                                  : SymplecticSpace::standard(rep.n);
  rep.validate();
  return rep;
}

json heis_action_to_json(const HeisenbergProjAction& h) {
  json boundary = json::array();
  for (int i = 0; i < h.boundary.dim(); ++i) boundary.push_back(vec_to_json(h.boundary.basis_vector(i)));
  return json{{"rep", rep_to_json(h.rep)},
              {"boundary", std::move(boundary)},
              {"reference_point", vec_to_json(h.reference_point)}};
}

HeisenbergProjAction heis_action_from_json(const json& j) {
  HeisenbergProjAction h;
  h.rep = rep_from_json(require(j, "rep"));
  const json& b = require(j, "boundary");
  if (!b.is_array()) throw std::invalid_argument("boundary must be an array of vectors");
  std::vector<QVec> vectors;
  for (const auto& e : b) vectors.push_back(vec_from_json(e));
  h.boundary = Subspace::from_vectors(h.rep.d, vectors);
  h.reference_point = vec_from_json(require(j, "reference_point"));
  h.validate();
  return h;
}

json additive_action_to_json(const AdditiveProjAction& act) {
  return json{{"n", act.n},
              {"d", act.d},
              {"generators", mat_list_to_json(act.generators)},
              {"reference_point", vec_to_json(act.reference_point)}};
}

AdditiveProjAction additive_action_from_json(const json& j) {
  AdditiveProjAction act;
  act.n = require_int(j, "n");
  act.d = require_int(j, "d");
  act.generators = mat_list_from_json(require(j, "generators"));
  act.reference_point = vec_from_json(require(j, "reference_point"));
  act.validate();
  return act;
}

json algebra_to_json(const MatAlgebra& a) {
  return json{{"d", a.ambient_size()}, {"basis", mat_list_to_json(a.basis())}};
}

MatAlgebra algebra_from_json(const json& j) {
  const int d = require_int(j, "d");
  return MatAlgebra(d, mat_list_from_json(require(j, "basis")));
}

json local_algebra_to_json(const LocalAlgebra& loc) {
  const int d = loc.ambient_size();
  json out = algebra_to_json(loc.algebra);
  out["maximal_ideal"] = subspace_to_matrices(loc.maximal_ideal, d);
  out["center"] = subspace_to_matrices(loc.center, d);
  json filt = json::array();
  for (const auto& f : loc.filtration) filt.push_back(subspace_to_matrices(f, d));
  out["filtration"] = std::move(filt);
  return out;
}

LocalAlgebra local_algebra_from_json(const json& j) {
  const MatAlgebra a = algebra_from_json(j);
  LocalAlgebra loc = local_anatomy(a);  // recompute, then cross-check the stored anatomy
  const int d = loc.ambient_size();
  if (j.contains("maximal_ideal") &&
      subspace_from_matrices(j.at("maximal_ideal"), d) != loc.maximal_ideal)
    throw std::invalid_argument("stored maximal ideal disagrees with the algebra");
  if (j.contains("center") && subspace_from_matrices(j.at("center"), d) != loc.center)
    throw std::invalid_argument("stored center disagrees with the algebra");
  return loc;
}

json structure_matrix_to_json(const StructureMatrix& sm) {
  return json{{"n", sm.n()}, {"M", mat_to_json(sm.M())}};
}

StructureMatrix structure_matrix_from_json(const json& j) {
  return StructureMatrix(require_int(j, "n"), mat_from_json(require(j, "M")));
}

json certificate_to_json(const InequivalenceCertificate& cert) {
  return json{{"left", structure_matrix_to_json(cert.left)},
              {"right", structure_matrix_to_json(cert.right)},
              {"invariants", json::array({coeffs_to_json(cert.invariant_left),
                                          coeffs_to_json(cert.invariant_right)})},
              {"verdict", cert.inequivalent ? "inequivalent" : "undistinguished"},
              {"transcript", json{{"sym_left", mat_to_json(cert.sym_left)},
                                  {"sym_right", mat_to_json(cert.sym_right)},
                                  {"ham_left", mat_to_json(cert.ham_left)},
                                  {"ham_right", mat_to_json(cert.ham_right)}}}};
}

InequivalenceCertificate certificate_from_json(const json& j) {
  const json& inv = require(j, "invariants");
  if (!inv.is_array() || inv.size() != 2)
    throw std::invalid_argument("certificate needs exactly two invariants");
  const json& tr = require(j, "transcript");
  const std::string verdict = require(j, "verdict").get<std::string>();
  if (verdict != "inequivalent" && verdict != "undistinguished")
    throw std::invalid_argument("unknown verdict '" + verdict + "'");
  return InequivalenceCertificate{structure_matrix_from_json(require(j, "left")),
                                  structure_matrix_from_json(require(j, "right")),
                                  coeffs_from_json(inv.at(0)),
                                  coeffs_from_json(inv.at(1)),
                                  verdict == "inequivalent",
                                  mat_from_json(require(tr, "sym_left")),
                                  mat_from_json(require(tr, "sym_right")),
                                  mat_from_json(require(tr, "ham_left")),
                                  mat_from_json(require(tr, "ham_right"))};
}

json descent_to_json(const DescentResult& res) {
  return json{{"fixed_direction", vec_to_json(res.fixed_dir)},
              {"dropped_coordinate", res.dropped_coordinate},
              {"complement", res.complement},
              {"quotient_action", additive_action_to_json(res.quotient_action)},
              {"tautological", res.tautological}};
}

}  // namespace heis
