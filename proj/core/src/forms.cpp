#include "liecot/forms.hpp"

#include "liecot/errors.hpp"

namespace liecot {

BilinearForm::BilinearForm(LieAlgebra g, Matrix m)
    : alg_(std::move(g)), m_(std::move(m)) {
  if (m_.rows() != alg_.dim() || m_.cols() != alg_.dim())
    throw DimensionMismatch("form matrix size");
  if (!m_.is_symmetric()) throw NotSymmetric("bilinear form must be symmetric");
}

Rational BilinearForm::eval(const Vector& x, const Vector& y) const {
  auto my = m_.apply(y.coords());
  Rational s = 0;
  for (std::size_t i = 0; i < my.size(); ++i) s += x[i] * my[i];
  return s;
}

FormSpace invariant_forms(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  RowReducer red(n * n);
  auto at = [n](std::vector<Rational>& row, std::size_t r, std::size_t c,
                const Rational& v) {
    if (v != 0) row[r * n + c] += v;
  };
  // Symmetry.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      std::vector<Rational> row(n * n);
      at(row, r, c, Rational(1));
      at(row, c, r, Rational(-1));
      red.add_row(std::move(row));
    }
  // B([e_i,e_j],e_k) + B(e_j,[e_i,e_k]) = 0; symmetric in (j,k) once B is.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto cij = g.bracket_basis(i, j);
      for (std::size_t k = j; k < n; ++k) {
        auto cik = g.bracket_basis(i, k);
        std::vector<Rational> row(n * n);
        for (std::size_t s = 0; s < n; ++s) {
          at(row, s, k, cij[s]);
          at(row, j, s, cik[s]);
        }
        red.add_row(std::move(row));
      }
    }
  return {n, nullspace(red)};
}

BilinearForm killing_form(const LieAlgebra& g) {
  return BilinearForm(g, g.killing_matrix());
}

BilinearForm duality_pairing(const LieAlgebra& g) {
  if (!g.is_cotangent()) throw NotCotangent("duality pairing needs a cotangent algebra");
  const std::size_t n = *g.cotangent_base_dim();
  Matrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) m(i, n + i) = m(n + i, i) = 1;
  BilinearForm b(g, std::move(m));
  if (!is_ad_invariant(b) || inertia(b.matrix()).n_zero != 0)
    throw ConsistencyError("duality pairing failed its invariance checks");
  return b;
}

bool is_ad_invariant(const BilinearForm& b) {
  const LieAlgebra& g = b.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix ad_i = g.ad_matrix(i);
    if (!(b.matrix() * ad_i + ad_i.transpose() * b.matrix()).is_zero()) return false;
  }
  return true;
}

bool is_orthogonal_structure(const BilinearForm& b) {
  return is_ad_invariant(b) && inertia(b.matrix()).n_zero == 0;
}

bool theta_equivariance_check(const BilinearForm& b) {
  if (inertia(b.matrix()).n_zero != 0)
    throw Degenerate("theta equivariance requires a nondegenerate form");
  return is_ad_invariant(b);
}

Inertia form_inertia(const BilinearForm& b) { return inertia(b.matrix()); }

OperatorSpace skew_prederivations(const LieAlgebra& g, const BilinearForm& b) {
  if (!is_orthogonal_structure(b))
    throw NotOrthogonal("skew prederivations need an orthogonal structure");
  const std::size_t n = g.dim();
  // B p + p^T B = 0, rows over the flattened operator unknowns.
  RowReducer red(n * n);
  const Matrix& m = b.matrix();
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Rational> row(n * n);
      for (std::size_t s = 0; s < n; ++s) {
        if (m(t, s) != 0) row[s * n + c] += m(t, s);
        if (m(s, c) != 0) row[s * n + t] += m(s, c);
      }
      red.add_row(std::move(row));
    }
  Subspace skew = nullspace(red);
  return {n, prederivations(g).space.intersect(skew)};
}

bool semisimple_cotangent_form_family_check(const LieAlgebra& g) {
  if (!g.is_semisimple() || adjoint_invariant_J(g).dim() != 1)
    throw NotSimple("expected a simple Lie algebra");
  const std::size_t n = g.dim();
  LieAlgebra d = cotangent(g);
  FormSpace computed = invariant_forms(d);

  Matrix killing_ext(2 * n, 2 * n);
  Matrix k = g.killing_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) killing_ext(i, j) = k(i, j);
  Matrix rows(2, 4 * n * n);
  auto dual = duality_pairing(d).matrix().flatten();
  auto kf = killing_ext.flatten();
  for (std::size_t j = 0; j < 4 * n * n; ++j) {
    rows(0, j) = dual[j];
    rows(1, j) = kf[j];
  }
  Subspace expected(4 * n * n, rows);
  return computed.dim() == 2 && computed.space == expected;
}

}  // namespace liecot
