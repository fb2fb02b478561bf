#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "liecot/lie_algebra.hpp"

namespace liecot {

// Algebra file format:
//   { "name": str, "dim": n, "basis": [labels],
//     "brackets": [ { "i": int, "j": int, "coeffs": { "k": "p/q", ... } } ] }
// Indices are 1-based, only i < j entries are stored, omitted pairs are zero
// brackets, rationals are "p/q" or "p" strings. Serialization is canonical
// (sorted keys, ascending bracket pairs) so round trips are bit-exact.
LieAlgebra algebra_from_json(const nlohmann::json& j);
LieAlgebra algebra_from_string(const std::string& text);
nlohmann::json algebra_to_json(const LieAlgebra& g);
std::string algebra_to_string(const LieAlgebra& g);

nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json subspace_to_json(const Subspace& s);

}  // namespace liecot
