#pragma once

#include "liecot/lie_algebra.hpp"
#include "liecot/linalg.hpp"
#include "liecot/operator_spaces.hpp"

namespace liecot {

// Symmetric bilinear form on an algebra; the matrix is theta as a map
// g -> g* via <theta(x), y> = mu(x, y). Holds its algebra by value so the
// form stays self-contained.
class BilinearForm {
 public:
  BilinearForm(LieAlgebra g, Matrix m);

  const LieAlgebra& algebra() const { return alg_; }
  const Matrix& matrix() const { return m_; }
  Rational eval(const Vector& x, const Vector& y) const;

 private:
  LieAlgebra alg_;
  Matrix m_;
};

// Space of ad-invariant symmetric forms, flattened like OperatorSpace.
struct FormSpace {
  std::size_t op_size;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const Matrix& form) const { return space.contains(form.flatten()); }
  Matrix basis_form(std::size_t k) const {
    return Matrix::unflatten(op_size, op_size, space.basis().row(k));
  }
};

// Solutions of B symmetric with B([x,y],z) + B(y,[x,z]) = 0.
FormSpace invariant_forms(const LieAlgebra& g);

BilinearForm killing_form(const LieAlgebra& g);

// The block-antidiagonal identity pairing <(x,f),(y,g)> = f(y) + g(x) on a
// cotangent algebra; verified ad-invariant and nondegenerate.
BilinearForm duality_pairing(const LieAlgebra& g_cotangent);

bool is_ad_invariant(const BilinearForm& b);

// Symmetric + ad-invariant + nondegenerate.
bool is_orthogonal_structure(const BilinearForm& b);

// theta ad_x = ad*_x theta, i.e. B ad_i + ad_i^T B = 0 for all i.
// Throws Degenerate when b has a radical.
bool theta_equivariance_check(const BilinearForm& b);

Inertia form_inertia(const BilinearForm& b);

// Prederivations p with B p + p^T B = 0. Throws NotOrthogonal unless b is an
// orthogonal structure.
OperatorSpace skew_prederivations(const LieAlgebra& g, const BilinearForm& b);

// For simple g: invariant_forms(T*g) must equal
// span{duality pairing, Killing form extended by zero}, dimension 2.
// Throws NotSimple unless g is semisimple with dim J(g) = 1.
bool semisimple_cotangent_form_family_check(const LieAlgebra& g_simple);

}  // namespace liecot
