#pragma once

#include "liecot/lie_algebra.hpp"
#include "liecot/linalg.hpp"

namespace liecot {

// A linear space of n x n operators, flattened row-major into R^(n^2).
struct OperatorSpace {
  std::size_t op_size;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const Matrix& op) const { return space.contains(op.flatten()); }
  Matrix basis_op(std::size_t k) const {
    return Matrix::unflatten(op_size, op_size, space.basis().row(k));
  }
};

// Maps g -> g* or g* -> g of a base algebra, flattened the same way.
struct MixedMapSpace {
  std::size_t op_size;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const Matrix& op) const { return space.contains(op.flatten()); }
  Matrix basis_op(std::size_t k) const {
    return Matrix::unflatten(op_size, op_size, space.basis().row(k));
  }
};

// Solution space of D[x,y] = [Dx,y] + [x,Dy] over all basis pairs.
OperatorSpace derivations(const LieAlgebra& g);

// Span of the ad matrices; dim = dim g - dim center.
OperatorSpace inner_derivations(const LieAlgebra& g);

// Solution space of p[x,[y,z]] = [px,[y,z]] + [x,[py,z]] + [x,[y,pz]].
OperatorSpace prederivations(const LieAlgebra& g);

// Centralizer of ad(g): all j with [j, ad_x] = 0.
OperatorSpace adjoint_invariant_J(const LieAlgebra& g);

// All j with [j, ad_x ad_y] = 0 over all pairs.
OperatorSpace adjoint_invariant_Jprime(const LieAlgebra& g);

// Cocycles b: g -> g* for the coadjoint action:
// b([x,y]) = ad*_x b(y) - ad*_y b(x).
MixedMapSpace coadjoint_cocycles(const LieAlgebra& g);

// Coboundaries x -> -ad*_x f0, spanned by the n dual-basis generators.
MixedMapSpace coadjoint_coboundaries(const LieAlgebra& g);

// Equivariant maps psi: g* -> g with psi ad*_x = ad_x psi and
// ad*_{psi(f)} g = ad*_{psi(g)} f.
MixedMapSpace equivariant_psi(const LieAlgebra& g);

std::size_t h1_adjoint(const LieAlgebra& g);
std::size_t h1_coadjoint(const LieAlgebra& g);

// dim der(T*g) - dim inner(T*g). Also recomputes the decomposition
// h1_adjoint + dim J + h1_coadjoint + dim Psi and throws ConsistencyError
// if the two sides disagree.
std::size_t h1_cotangent(const LieAlgebra& g);

// der(D) graded by the g / g* block split of a cotangent algebra:
// G0 = block-diagonal derivations, G1 = block-antidiagonal ones.
struct GradedSplit {
  OperatorSpace g0;
  OperatorSpace g1;
  // G1 refined into the cocycle and equivariant halves.
  Subspace q_embedded;
  Subspace psi_embedded;
};

// Throws NotCotangent when g was not built by cotangent(). Verifies
// dim G0 + dim G1 = dim der, the closure relations [Gi,Gj] in G(i+j), and
// that the embedded Q and Psi halves are abelian; ConsistencyError on any
// failure.
GradedSplit graded_split(const LieAlgebra& g);

// For every basis derivation of a cotangent algebra with blocks
// [[alpha, psi], [beta, xi]], checks [xi, ad*_x] = ad*_{alpha(x)} and that
// xi^T + alpha centralizes ad of the base algebra.
bool xi_decomposition_check(const LieAlgebra& g);

}  // namespace liecot
