#pragma once

#include <nlohmann/json_fwd.hpp>

#include "heis/correspondence.hpp"
#include "heis/structure.hpp"

// Repo-wide JSON formats. Matrices: {"rows": r, "cols": c, "entries":
// [["p/q", ...], ...]} with exact fraction strings; "3" and "3/1" are both
// accepted, output is always reduced and never carries "/1". Vectors are
// arrays of fraction strings. All readers validate and throw
// std::invalid_argument on malformed input.

namespace heis {

using nlohmann::json;

json mat_to_json(const QMat& m);
QMat mat_from_json(const json& j);

json vec_to_json(const QVec& v);
QVec vec_from_json(const json& j);

json coeffs_to_json(const std::vector<Rat>& coeffs);
std::vector<Rat> coeffs_from_json(const json& j);

json rep_to_json(const HeisenbergMatRep& rep);
HeisenbergMatRep rep_from_json(const json& j);

json heis_action_to_json(const HeisenbergProjAction& h);
HeisenbergProjAction heis_action_from_json(const json& j);

json additive_action_to_json(const AdditiveProjAction& act);
AdditiveProjAction additive_action_from_json(const json& j);

json algebra_to_json(const MatAlgebra& a);
MatAlgebra algebra_from_json(const json& j);

json local_algebra_to_json(const LocalAlgebra& loc);
LocalAlgebra local_algebra_from_json(const json& j);

json structure_matrix_to_json(const StructureMatrix& sm);
StructureMatrix structure_matrix_from_json(const json& j);

json certificate_to_json(const InequivalenceCertificate& cert);
InequivalenceCertificate certificate_from_json(const json& j);

json descent_to_json(const DescentResult& res);

}  // namespace heis
