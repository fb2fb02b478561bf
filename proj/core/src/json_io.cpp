#include "liecot/json_io.hpp"

#include "liecot/errors.hpp"
#include "liecot/rational.hpp"

namespace liecot {

using nlohmann::json;

LieAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("algebra JSON must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ParseError("algebra JSON needs an unsigned 'dim'");
  const std::size_t n = j["dim"].get<std::size_t>();
  std::string name = j.value("name", std::string("algebra"));
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    for (const auto& l : j["basis"]) labels.push_back(l.get<std::string>());
    if (labels.size() != n) throw ParseError("basis label count != dim");
  }
  std::vector<LieAlgebra::BracketEntry> table;
  for (const auto& e : j.value("brackets", json::array())) {
    std::size_t i = e.at("i").get<std::size_t>();
    std::size_t jj = e.at("j").get<std::size_t>();
    if (i < 1 || jj < 1 || i >= jj || jj > n)
      throw ParseError("bracket indices must satisfy 1 <= i < j <= dim");
    std::vector<Rational> coords(n);
    for (const auto& [key, val] : e.at("coeffs").items()) {
      std::size_t k = 0;
      try {
        k = static_cast<std::size_t>(std::stoul(key));
      } catch (...) {
        throw ParseError("non-numeric coefficient index '" + key + "'");
      }
      if (k < 1 || k > n) throw ParseError("coefficient index out of range");
      coords[k - 1] = parse_rational(val.get<std::string>());
    }
    table.push_back({i - 1, jj - 1, std::move(coords)});
  }
  return LieAlgebra(std::move(name), n, std::move(table), std::move(labels));
}

LieAlgebra algebra_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

json algebra_to_json(const LieAlgebra& g) {
  json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis_labels();
  json brackets = json::array();
  for (const auto& e : g.bracket_table()) {
    json coeffs = json::object();
    for (std::size_t k = 0; k < e.coords.size(); ++k)
      if (e.coords[k] != 0) coeffs[std::to_string(k + 1)] = to_string(e.coords[k]);
    if (coeffs.empty()) continue;
    brackets.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", coeffs}});
  }
  j["brackets"] = brackets;
  return j;
}

std::string algebra_to_string(const LieAlgebra& g) {
  return algebra_to_json(g).dump(2) + "\n";
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
    rows.push_back(row);
  }
  return rows;
}

json subspace_to_json(const Subspace& s) {
  json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  j["basis"] = matrix_to_json(s.basis());
  return j;
}

}  // namespace liecot
