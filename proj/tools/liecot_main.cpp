// liecot: Lie-algebra computations for cotangent (Drinfel'd double)
// structures. Loads algebras from JSON or the built-in catalog, runs the
// solvers, and emits canonical JSON reports or CSV trajectories.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "liecot/affine.hpp"
#include "liecot/catalog.hpp"
#include "liecot/errors.hpp"
#include "liecot/forms.hpp"
#include "liecot/json_io.hpp"
#include "liecot/operator_spaces.hpp"
#include "liecot/repro.hpp"

namespace {

using nlohmann::json;
using namespace liecot;

constexpr int kExitBadInput = 1;
constexpr int kExitPrecondition = 2;

bool g_verbose = false;

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

LieAlgebra load_algebra(const std::string& spec) {
  if (spec.empty()) throw ParseError("no algebra given");
  if (spec == "-") return algebra_from_string(read_stream(std::cin));
  std::ifstream f(spec);
  if (!f) throw ParseError("cannot open '" + spec + "'");
  return algebra_from_string(read_stream(f));
}

std::string fmt15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

void emit(const json& report) {
  std::cout << report.dump(2) << "\n";
  if (g_verbose && report.contains("results"))
    std::cerr << report["command"].get<std::string>() << ": "
              << report["results"].dump() << "\n";
}

json base_report(const std::string& command, const LieAlgebra& g) {
  json r;
  r["command"] = command;
  r["inputs"] = {{"algebra", g.name()}, {"dim", g.dim()}};
  r["warnings"] = json::array();
  return r;
}

json inertia_json(const Inertia& in) {
  return {{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}};
}

// Basis of a space of flattened n x n maps, reshaped to matrices.
json basis_matrices_json(const Subspace& s, std::size_t n) {
  json out = json::array();
  for (std::size_t k = 0; k < s.dim(); ++k)
    out.push_back(matrix_to_json(Matrix::unflatten(n, n, s.basis().row(k))));
  return out;
}

std::vector<Rational> parse_coeff_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Matrix matrix_from_json_file(const std::string& path, std::size_t n) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open form file '" + path + "'");
  json j = json::parse(read_stream(f), nullptr, false);
  if (j.is_discarded() || !j.is_array()) throw ParseError("form file must hold a JSON matrix");
  Matrix m(n, n);
  if (j.size() != n) throw ParseError("form matrix has wrong size");
  for (std::size_t r = 0; r < n; ++r) {
    if (j[r].size() != n) throw ParseError("form matrix has wrong size");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_rational(j[r][c].get<std::string>());
  }
  return m;
}

// --form duality | killing | <k> (k-th basis element of the computed
// invariant-form space) | coeffs (rational combination via --coeffs) |
// <file with a JSON matrix of rational strings>
BilinearForm resolve_form(const LieAlgebra& g, const std::string& spec,
                          const std::string& coeffs) {
  if (spec == "duality") return duality_pairing(g);
  if (spec == "killing") return killing_form(g);
  bool is_index = !spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos;
  if (is_index || spec == "coeffs" || !coeffs.empty()) {
    FormSpace fs = invariant_forms(g);
    if (is_index) {
      std::size_t k = std::stoul(spec);
      if (k >= fs.dim())
        throw InvalidParam("form index " + spec + " out of range; the invariant form space has dimension " +
                           std::to_string(fs.dim()));
      return BilinearForm(g, fs.basis_form(k));
    }
    auto c = parse_coeff_list(coeffs);
    if (c.size() != fs.dim())
      throw InvalidParam("--coeffs needs " + std::to_string(fs.dim()) +
                         " entries for this algebra's invariant form space");
    Matrix m(g.dim(), g.dim());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) m = m + fs.basis_form(k) * c[k];
    return BilinearForm(g, m);
  }
  return BilinearForm(g, matrix_from_json_file(spec, g.dim()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie-theoretic computations on cotangent algebras of Lie groups"};
  app.require_subcommand(1);
  app.add_flag("--verbose", g_verbose, "human-readable summary on stderr");

  std::string alg_spec, form_spec, coeffs;

  auto add_algebra_arg = [&](CLI::App* cmd) {
    cmd->add_option("file", alg_spec, "algebra JSON file, or - for stdin");
    cmd->add_option("--algebra", alg_spec, "algebra JSON file, or - for stdin");
  };

  auto* c_check = app.add_subcommand("check", "validate an algebra file (Jacobi identity)");
  add_algebra_arg(c_check);
  auto* c_cot = app.add_subcommand("cotangent", "emit the cotangent algebra T*g as JSON");
  add_algebra_arg(c_cot);
  auto* c_der = app.add_subcommand("der", "derivation algebra");
  add_algebra_arg(c_der);
  auto* c_pder = app.add_subcommand("pder", "prederivation algebra");
  add_algebra_arg(c_pder);
  auto* c_inner = app.add_subcommand("inner", "inner derivations");
  add_algebra_arg(c_inner);
  auto* c_j = app.add_subcommand("jspace", "centralizer of ad(g)");
  add_algebra_arg(c_j);
  auto* c_jp = app.add_subcommand("jprime", "centralizer of all ad_x ad_y");
  add_algebra_arg(c_jp);
  auto* c_cocy = app.add_subcommand("cocycles", "coadjoint 1-cocycles and coboundaries");
  add_algebra_arg(c_cocy);
  auto* c_psi = app.add_subcommand("psi", "equivariant maps g* -> g");
  add_algebra_arg(c_psi);
  auto* c_h1 = app.add_subcommand("h1", "first cohomology dimensions");
  add_algebra_arg(c_h1);
  auto* c_forms = app.add_subcommand("forms", "ad-invariant symmetric forms");
  add_algebra_arg(c_forms);
  auto* c_inertia = app.add_subcommand("inertia", "signature of a bilinear form");
  add_algebra_arg(c_inertia);
  c_inertia->add_option("--form", form_spec, "duality | killing | coeffs | file")->required();
  c_inertia->add_option("--coeffs", coeffs, "rational coefficients against the form basis");
  auto* c_skew = app.add_subcommand("skewpder", "prederivations skew w.r.t. a form");
  add_algebra_arg(c_skew);
  c_skew->add_option("--form", form_spec, "duality | killing | coeffs | file")->required();
  c_skew->add_option("--coeffs", coeffs, "rational coefficients against the form basis");
  auto* c_graded = app.add_subcommand("graded", "block grading of der(T*g)");
  add_algebra_arg(c_graded);
  auto* c_xi = app.add_subcommand("xicheck", "xi = (j - alpha)^t decomposition check");
  add_algebra_arg(c_xi);

  std::string cat_name;
  std::size_t cat_n = 0;
  std::string cat_lambda = "1";
  auto* c_cat = app.add_subcommand("catalog", "emit a built-in algebra as JSON");
  c_cat->add_option("name", cat_name, "abelian|aff_r|sl2|so3|h3|oscillator")->required();
  c_cat->add_option("--n", cat_n, "dimension (abelian)");
  c_cat->add_option("--lambda", cat_lambda, "oscillator parameter (rational, > 0)");

  // aff: closed-form geometry of the affine group of the line.
  auto* c_aff = app.add_subcommand("aff", "affine group of the real line");
  std::string aff_op;
  std::vector<double> aff_x, aff_y;
  double aff_t = 1.0, aff_t0 = 0.0, aff_t1 = 1.0;
  std::size_t aff_samples = 100;
  c_aff->add_option("op", aff_op, "mul|inv|exp|log|geodesic|expconn|logconn|symplectic")
      ->required();
  c_aff->add_option("--x", aff_x, "first element / tangent (comma-separated)")->delimiter(',');
  c_aff->add_option("--y", aff_y, "second element")->delimiter(',');
  c_aff->add_option("--t", aff_t, "geodesic parameter");
  c_aff->add_option("--t0", aff_t0, "trajectory start");
  c_aff->add_option("--t1", aff_t1, "trajectory end");
  c_aff->add_option("--samples", aff_samples, "trajectory sample count");

  auto* c_dbl = app.add_subcommand("double", "double Lie group of Aff(R)");
  std::string dbl_op;
  std::vector<double> dbl_x, dbl_y;
  double dbl_tend = 1.0;
  std::size_t dbl_steps = 1000;
  c_dbl->add_option("op", dbl_op, "mul|inv|exp|log|heisexp|heislog|geodesic|christoffel|jcheck")
      ->required();
  c_dbl->add_option("--x", dbl_x, "element / tangent (comma-separated)")->delimiter(',');
  c_dbl->add_option("--y", dbl_y, "second element")->delimiter(',');
  c_dbl->add_option("--t-end", dbl_tend, "integration end time");
  c_dbl->add_option("--steps", dbl_steps, "RK4 step count");

  auto* c_repro = app.add_subcommand("repro", "run the full example suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_cat->parsed()) {
      std::cout << algebra_to_string(catalog(cat_name, cat_n, parse_rational(cat_lambda)));
      return 0;
    }
    if (c_check->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      json r = base_report("check", g);
      r["results"] = {{"jacobi", "ok"}, {"dim", g.dim()},
                      {"semisimple", g.is_semisimple()}, {"perfect", g.is_perfect()},
                      {"center_dim", g.center().dim()}};
      emit(r);
      return 0;
    }
    if (c_cot->parsed()) {
      std::cout << algebra_to_string(cotangent(load_algebra(alg_spec)));
      return 0;
    }
    if (c_der->parsed() || c_inner->parsed() || c_j->parsed() || c_jp->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      std::string name = c_der->parsed()   ? "der"
                         : c_inner->parsed() ? "inner"
                         : c_j->parsed()     ? "jspace"
                                             : "jprime";
      OperatorSpace s = c_der->parsed()   ? derivations(g)
                        : c_inner->parsed() ? inner_derivations(g)
                        : c_j->parsed()     ? adjoint_invariant_J(g)
                                            : adjoint_invariant_Jprime(g);
      json r = base_report(name, g);
      r["results"] = {{"dim", s.dim()}, {"space", subspace_to_json(s.space)},
                      {"basis_matrices", basis_matrices_json(s.space, g.dim())}};
      emit(r);
      return 0;
    }
    if (c_pder->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      OperatorSpace p = prederivations(g);
      OperatorSpace d = derivations(g);
      json r = base_report("pder", g);
      r["results"] = {{"dim", p.dim()}, {"dim_der", d.dim()},
                      {"space", subspace_to_json(p.space)},
                      {"basis_matrices", basis_matrices_json(p.space, g.dim())}};
      if (p.dim() != d.dim())
        r["warnings"].push_back("prederivations strictly contain derivations (dim " +
                                std::to_string(p.dim()) + " vs " + std::to_string(d.dim()) +
                                ")");
      emit(r);
      return 0;
    }
    if (c_cocy->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      MixedMapSpace q = coadjoint_cocycles(g);
      MixedMapSpace b1 = coadjoint_coboundaries(g);
      json r = base_report("cocycles", g);
      r["results"] = {{"dim", q.dim()}, {"dim_coboundaries", b1.dim()},
                      {"h1_coadjoint", q.dim() - b1.dim()},
                      {"space", subspace_to_json(q.space)},
                      {"basis_matrices", basis_matrices_json(q.space, g.dim())}};
      emit(r);
      return 0;
    }
    if (c_psi->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      MixedMapSpace s = equivariant_psi(g);
      json r = base_report("psi", g);
      r["results"] = {{"dim", s.dim()}, {"space", subspace_to_json(s.space)},
                      {"basis_matrices", basis_matrices_json(s.space, g.dim())}};
      emit(r);
      return 0;
    }
    if (c_h1->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      json r = base_report("h1", g);
      r["results"] = {{"h1_adjoint", h1_adjoint(g)},
                      {"h1_coadjoint", h1_coadjoint(g)},
                      {"dim_j", adjoint_invariant_J(g).dim()},
                      {"dim_psi", equivariant_psi(g).dim()},
                      {"h1_cotangent", h1_cotangent(g)}};
      emit(r);
      return 0;
    }
    if (c_forms->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      FormSpace fs = invariant_forms(g);
      json r = base_report("forms", g);
      r["results"] = {{"dim", fs.dim()}, {"space", subspace_to_json(fs.space)},
                      {"basis_matrices", basis_matrices_json(fs.space, g.dim())}};
      emit(r);
      return 0;
    }
    if (c_inertia->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      BilinearForm b = resolve_form(g, form_spec, coeffs);
      json r = base_report("inertia", g);
      r["inputs"]["form"] = form_spec;
      if (!coeffs.empty()) r["inputs"]["coeffs"] = coeffs;
      r["results"] = inertia_json(form_inertia(b));
      emit(r);
      return 0;
    }
    if (c_skew->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      BilinearForm b = resolve_form(g, form_spec, coeffs);
      OperatorSpace s = skew_prederivations(g, b);
      json r = base_report("skewpder", g);
      r["inputs"]["form"] = form_spec;
      if (!coeffs.empty()) r["inputs"]["coeffs"] = coeffs;
      r["results"] = {{"dim", s.dim()}, {"space", subspace_to_json(s.space)},
                      {"basis_matrices", basis_matrices_json(s.space, g.dim())}};
      emit(r);
      return 0;
    }
    if (c_graded->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      GradedSplit gs = graded_split(g);
      json r = base_report("graded", g);
      r["results"] = {{"dim_g0", gs.g0.dim()},
                      {"dim_g1", gs.g1.dim()},
                      {"dim_q", gs.q_embedded.dim()},
                      {"dim_psi", gs.psi_embedded.dim()},
                      {"g0", subspace_to_json(gs.g0.space)},
                      {"g1", subspace_to_json(gs.g1.space)}};
      emit(r);
      return 0;
    }
    if (c_xi->parsed()) {
      LieAlgebra g = load_algebra(alg_spec);
      json r = base_report("xicheck", g);
      r["results"] = {{"holds", xi_decomposition_check(g)}};
      emit(r);
      return 0;
    }
    if (c_aff->parsed()) {
      using namespace liecot::affine;
      auto need = [&](const std::vector<double>& v, std::size_t n, const char* what) {
        if (v.size() != n) throw InvalidParam(std::string("expected ") + what);
      };
      json r;
      r["command"] = "aff " + aff_op;
      r["warnings"] = json::array();
      if (aff_op == "mul") {
        need(aff_x, 2, "--x a,b");
        need(aff_y, 2, "--y a,b");
        AffElement p = aff_mul({aff_x[0], aff_x[1]}, {aff_y[0], aff_y[1]});
        r["results"] = {{"a", fmt15(p.a)}, {"b", fmt15(p.b)}};
      } else if (aff_op == "inv") {
        need(aff_x, 2, "--x a,b");
        AffElement p = aff_inv({aff_x[0], aff_x[1]});
        r["results"] = {{"a", fmt15(p.a)}, {"b", fmt15(p.b)}};
      } else if (aff_op == "exp") {
        need(aff_x, 2, "--x xi1,xi2");
        AffElement p = aff_exp({aff_x[0], aff_x[1]});
        r["results"] = {{"a", fmt15(p.a)}, {"b", fmt15(p.b)}};
      } else if (aff_op == "log") {
        need(aff_x, 2, "--x a,b");
        AffTangent v = aff_log({aff_x[0], aff_x[1]});
        r["results"] = {{"xi1", fmt15(v.xi1)}, {"xi2", fmt15(v.xi2)}};
      } else if (aff_op == "expconn") {
        need(aff_x, 2, "--x xi1,xi2");
        AffElement p = aff_exp_connection({aff_x[0], aff_x[1]});
        r["results"] = {{"a", fmt15(p.a)}, {"b", fmt15(p.b)}};
      } else if (aff_op == "logconn") {
        need(aff_x, 2, "--x a,b");
        AffTangent v = aff_log_connection({aff_x[0], aff_x[1]});
        r["results"] = {{"xi1", fmt15(v.xi1)}, {"xi2", fmt15(v.xi2)}};
      } else if (aff_op == "symplectic") {
        auto w = symplectic_form();
        r["results"] = {{"matrix", {{fmt15(w[0][0]), fmt15(w[0][1])},
                                    {fmt15(w[1][0]), fmt15(w[1][1])}}}};
      } else if (aff_op == "geodesic") {
        need(aff_x, 2, "--x xi1,xi2");
        if (c_aff->count("--t0") || c_aff->count("--t1")) {
          for (std::size_t k = 0; k <= aff_samples; ++k) {
            double t = aff_t0 + (aff_t1 - aff_t0) * static_cast<double>(k) /
                                    static_cast<double>(aff_samples);
            AffElement p = aff_geodesic({aff_x[0], aff_x[1]}, t);
            std::cout << fmt15(t) << "," << fmt15(p.a) << "," << fmt15(p.b) << "\n";
          }
          return 0;
        }
        AffElement p = aff_geodesic({aff_x[0], aff_x[1]}, aff_t);
        r["results"] = {{"a", fmt15(p.a)}, {"b", fmt15(p.b)}};
      } else {
        throw InvalidParam("unknown aff op '" + aff_op + "'");
      }
      emit(r);
      return 0;
    }
    if (c_dbl->parsed()) {
      using namespace liecot::affine;
      auto need = [&](const std::vector<double>& v, std::size_t n, const char* what) {
        if (v.size() != n) throw InvalidParam(std::string("expected ") + what);
      };
      json r;
      r["command"] = "double " + dbl_op;
      r["warnings"] = json::array();
      auto elem_json = [&](const DoubleElement& e) {
        return json{{"x1", fmt15(e.x1)}, {"x2", fmt15(e.x2)},
                    {"x3", fmt15(e.x3)}, {"x4", fmt15(e.x4)}};
      };
      if (dbl_op == "mul") {
        need(dbl_x, 4, "--x x1,x2,x3,x4");
        need(dbl_y, 4, "--y y1,y2,y3,y4");
        r["results"] = elem_json(double_mul({dbl_x[0], dbl_x[1], dbl_x[2], dbl_x[3]},
                                            {dbl_y[0], dbl_y[1], dbl_y[2], dbl_y[3]}));
      } else if (dbl_op == "inv") {
        need(dbl_x, 4, "--x x1,x2,x3,x4");
        r["results"] = elem_json(double_inv({dbl_x[0], dbl_x[1], dbl_x[2], dbl_x[3]}));
      } else if (dbl_op == "exp") {
        need(dbl_x, 4, "--x xi1,xi2,xi3,xi4");
        r["results"] = elem_json(double_exp({dbl_x[0], dbl_x[1], dbl_x[2], dbl_x[3]}));
      } else if (dbl_op == "log") {
        need(dbl_x, 4, "--x x1,x2,x3,x4");
        DoubleTangent v = double_log({dbl_x[0], dbl_x[1], dbl_x[2], dbl_x[3]});
        r["results"] = {{"xi1", fmt15(v.xi1)}, {"xi2", fmt15(v.xi2)},
                        {"xi3", fmt15(v.xi3)}, {"xi4", fmt15(v.xi4)}};
      } else if (dbl_op == "heisexp") {
        need(dbl_x, 3, "--x xi2,xi3,xi4");
        auto y = heis_exp({dbl_x[0], dbl_x[1], dbl_x[2]});
        r["results"] = {{"y2", fmt15(y[0])}, {"y3", fmt15(y[1])}, {"y4", fmt15(y[2])}};
      } else if (dbl_op == "heislog") {
        need(dbl_x, 3, "--x y2,y3,y4");
        auto v = heis_log({dbl_x[0], dbl_x[1], dbl_x[2]});
        r["results"] = {{"xi2", fmt15(v[0])}, {"xi3", fmt15(v[1])}, {"xi4", fmt15(v[2])}};
      } else if (dbl_op == "christoffel") {
        auto gamma = double_connection();
        json entries = json::array();
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
              if (gamma[i][j][k] != 0)
                entries.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1},
                                   {"value", fmt15(gamma[i][j][k])}});
        r["results"] = {{"nonzero", entries}};
      } else if (dbl_op == "jcheck") {
        auto rep = complex_structure_checks();
        r["results"] = {{"j_squared_is_minus_identity", rep.j_squared_is_minus_identity},
                        {"not_bi_invariant", rep.not_bi_invariant},
                        {"j_of_bracket",
                         {fmt15(rep.j_of_bracket[0]), fmt15(rep.j_of_bracket[1]),
                          fmt15(rep.j_of_bracket[2]), fmt15(rep.j_of_bracket[3])}},
                        {"bracket_of_j",
                         {fmt15(rep.bracket_of_j[0]), fmt15(rep.bracket_of_j[1]),
                          fmt15(rep.bracket_of_j[2]), fmt15(rep.bracket_of_j[3])}}};
      } else if (dbl_op == "geodesic") {
        need(dbl_x, 4, "--x xi1,xi2,xi3,xi4");
        auto traj = double_geodesic_integrate({dbl_x[0], dbl_x[1], dbl_x[2], dbl_x[3]},
                                              dbl_tend, dbl_steps);
        for (const auto& p : traj)
          std::cout << fmt15(p.t) << "," << fmt15(p.x[0]) << "," << fmt15(p.x[1]) << ","
                    << fmt15(p.x[2]) << "," << fmt15(p.x[3]) << "\n";
        return 0;
      } else {
        throw InvalidParam("unknown double op '" + dbl_op + "'");
      }
      emit(r);
      return 0;
    }
    if (c_repro->parsed()) {
      auto results = run_all_criteria();
      bool all = true;
      for (const auto& c : results) {
        all = all && c.pass;
        std::printf("%-4s [%2d] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.id,
                    c.label.c_str(), c.detail.empty() ? "" : " -- ",
                    c.detail.c_str());
      }
      return all ? 0 : kExitPrecondition;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const JacobiFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const InvalidParam& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    // Precondition failures: wrong structure for the requested computation.
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return 0;
}
