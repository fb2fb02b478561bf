#include "liecot/operator_spaces.hpp"

#include "liecot/errors.hpp"

namespace liecot {

namespace {

// Constraint rows over the n*n unknowns of one operator matrix M,
// unknown index of M[r][c] being r*n + c.
class ConstraintSet {
 public:
  explicit ConstraintSet(std::size_t n) : n_(n), red_(n * n) {}

  std::vector<Rational> fresh_row() const { return std::vector<Rational>(n_ * n_); }
  void commit(std::vector<Rational> row) { red_.add_row(std::move(row)); }

  static void bump(std::vector<Rational>& row, std::size_t n, std::size_t r,
                   std::size_t c, const Rational& v) {
    if (v != 0) row[r * n + c] += v;
  }

  // Rows of M*A - B*M = 0 (an n x n matrix equation).
  void add_intertwining(const Matrix& a, const Matrix& b) {
    for (std::size_t t = 0; t < n_; ++t)
      for (std::size_t c = 0; c < n_; ++c) {
        auto row = fresh_row();
        for (std::size_t s = 0; s < n_; ++s) {
          bump(row, n_, t, s, a(s, c));
          bump(row, n_, s, c, -b(t, s));
        }
        commit(std::move(row));
      }
  }

  Subspace solve() { return nullspace(red_); }

 private:
  std::size_t n_;
  RowReducer red_;
};

std::size_t idx(std::size_t n, std::size_t r, std::size_t c) { return r * n + c; }

}  // namespace

OperatorSpace derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto cij = g.bracket_basis(i, j);
      for (std::size_t t = 0; t < n; ++t) {
        auto row = cs.fresh_row();
        // D([e_i,e_j])_t
        for (std::size_t k = 0; k < n; ++k) ConstraintSet::bump(row, n, t, k, cij[k]);
        // -[D e_i, e_j]_t - [e_i, D e_j]_t
        for (std::size_t r = 0; r < n; ++r) {
          ConstraintSet::bump(row, n, r, i, -g.bracket_basis(r, j)[t]);
          ConstraintSet::bump(row, n, r, j, -g.bracket_basis(i, r)[t]);
        }
        cs.commit(std::move(row));
      }
    }
  return {n, cs.solve()};
}

OperatorSpace inner_derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix rows(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto flat = g.ad_matrix(i).flatten();
    for (std::size_t k = 0; k < n * n; ++k) rows(i, k) = flat[k];
  }
  return {n, Subspace(n * n, rows)};
}

OperatorSpace prederivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  // The defining identity is antisymmetric only in (y,z); x runs over the
  // whole basis to catch every consequence.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      auto w = g.bracket_basis(j, k);  // [e_j, e_k]
      Matrix ad_w(n, n);
      for (std::size_t m = 0; m < n; ++m)
        if (w[m] != 0) ad_w = ad_w + g.ad_matrix(m) * w[m];
      for (std::size_t i = 0; i < n; ++i) {
        const Matrix& ad_i = g.ad_matrix(i);
        auto u = ad_i.apply(w);                 // [e_i, [e_j, e_k]]
        Matrix ad_i_ad_j = ad_i * g.ad_matrix(j);
        for (std::size_t t = 0; t < n; ++t) {
          auto row = cs.fresh_row();
          // p([e_i,[e_j,e_k]])_t
          for (std::size_t m = 0; m < n; ++m) ConstraintSet::bump(row, n, t, m, u[m]);
          for (std::size_t r = 0; r < n; ++r) {
            // -[p e_i, w]_t ; [e_r, w] = -ad_w e_r
            ConstraintSet::bump(row, n, r, i, ad_w(t, r));
            // -[e_i, [p e_j, e_k]]_t
            ConstraintSet::bump(row, n, r, j, -ad_i.apply(g.bracket_basis(r, k))[t]);
            // -[e_i, [e_j, p e_k]]_t
            ConstraintSet::bump(row, n, r, k, -ad_i_ad_j(t, r));
          }
          cs.commit(std::move(row));
        }
      }
    }
  return {n, cs.solve()};
}

OperatorSpace adjoint_invariant_J(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  for (std::size_t i = 0; i < n; ++i) cs.add_intertwining(g.ad_matrix(i), g.ad_matrix(i));
  return {n, cs.solve()};
}

OperatorSpace adjoint_invariant_Jprime(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix comp = g.ad_matrix(i) * g.ad_matrix(j);
      cs.add_intertwining(comp, comp);
    }
  return {n, cs.solve()};
}

MixedMapSpace coadjoint_cocycles(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto cij = g.bracket_basis(i, j);
      Matrix coad_i = g.coad_matrix(i), coad_j = g.coad_matrix(j);
      for (std::size_t t = 0; t < n; ++t) {
        auto row = cs.fresh_row();
        for (std::size_t k = 0; k < n; ++k) ConstraintSet::bump(row, n, t, k, cij[k]);
        for (std::size_t s = 0; s < n; ++s) {
          ConstraintSet::bump(row, n, s, j, -coad_i(t, s));
          ConstraintSet::bump(row, n, s, i, coad_j(t, s));
        }
        cs.commit(std::move(row));
      }
    }
  return {n, cs.solve()};
}

MixedMapSpace coadjoint_coboundaries(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Generator for f0 = e_a*: column j is -ad*_{e_j} e_a*.
  Matrix rows(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix coad_j = g.coad_matrix(j);
      for (std::size_t t = 0; t < n; ++t) rows(a, idx(n, t, j)) = -coad_j(t, a);
    }
  }
  return {n, Subspace(n * n, rows)};
}

MixedMapSpace equivariant_psi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ConstraintSet cs(n);
  for (std::size_t i = 0; i < n; ++i)
    cs.add_intertwining(g.coad_matrix(i), g.ad_matrix(i));
  // ad*_{psi(e_j*)} e_k* = ad*_{psi(e_k*)} e_j*
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      for (std::size_t t = 0; t < n; ++t) {
        auto row = cs.fresh_row();
        for (std::size_t r = 0; r < n; ++r) {
          Matrix coad_r = g.coad_matrix(r);
          ConstraintSet::bump(row, n, r, j, coad_r(t, k));
          ConstraintSet::bump(row, n, r, k, -coad_r(t, j));
        }
        cs.commit(std::move(row));
      }
  return {n, cs.solve()};
}

std::size_t h1_adjoint(const LieAlgebra& g) {
  return derivations(g).dim() - inner_derivations(g).dim();
}

std::size_t h1_coadjoint(const LieAlgebra& g) {
  return coadjoint_cocycles(g).dim() - coadjoint_coboundaries(g).dim();
}

std::size_t h1_cotangent(const LieAlgebra& g) {
  LieAlgebra d = cotangent(g);
  std::size_t lhs = derivations(d).dim() - inner_derivations(d).dim();
  std::size_t rhs = h1_adjoint(g) + adjoint_invariant_J(g).dim() + h1_coadjoint(g) +
                    equivariant_psi(g).dim();
  if (lhs != rhs)
    throw ConsistencyError("H1 decomposition mismatch for " + g.name() + ": " +
                           std::to_string(lhs) + " vs " + std::to_string(rhs));
  return lhs;
}

namespace {

// Coordinate subspace of flattened 2n x 2n operators supported on the given
// block pattern. diag = true keeps the g->g and g*->g* blocks.
Subspace block_subspace(std::size_t two_n, std::size_t n, bool diag) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < two_n; ++r)
    for (std::size_t c = 0; c < two_n; ++c) {
      bool in_diag = (r < n) == (c < n);
      if (in_diag != diag) continue;
      std::vector<Rational> v(two_n * two_n);
      v[r * two_n + c] = 1;
      rows.push_back(std::move(v));
    }
  Matrix m(rows.size(), two_n * two_n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < two_n * two_n; ++j) m(i, j) = rows[i][j];
  return Subspace(two_n * two_n, m);
}

// Coordinate subspace keeping exactly one off-diagonal block: the beta block
// (g -> g*, rows >= n, cols < n) or the psi block (g* -> g).
Subspace single_block_subspace(std::size_t two_n, std::size_t n, bool beta) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < two_n; ++r)
    for (std::size_t c = 0; c < two_n; ++c) {
      bool in_beta = r >= n && c < n;
      bool in_psi = r < n && c >= n;
      if (!(beta ? in_beta : in_psi)) continue;
      std::vector<Rational> v(two_n * two_n);
      v[r * two_n + c] = 1;
      rows.push_back(std::move(v));
    }
  Matrix m(rows.size(), two_n * two_n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < two_n * two_n; ++j) m(i, j) = rows[i][j];
  return Subspace(two_n * two_n, m);
}

bool bracket_closed(const OperatorSpace& a, const OperatorSpace& b,
                    const Subspace& target) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Matrix c = commutator(a.basis_op(i), b.basis_op(j));
      if (!target.contains(c.flatten())) return false;
    }
  return true;
}

}  // namespace

GradedSplit graded_split(const LieAlgebra& g) {
  if (!g.is_cotangent())
    throw NotCotangent("graded split needs the g/g* block structure");
  const std::size_t two_n = g.dim(), n = *g.cotangent_base_dim();
  OperatorSpace der = derivations(g);
  Subspace diag = block_subspace(two_n, n, true);
  Subspace anti = block_subspace(two_n, n, false);
  GradedSplit out{{two_n, der.space.intersect(diag)},
                  {two_n, der.space.intersect(anti)},
                  der.space.intersect(single_block_subspace(two_n, n, true)),
                  der.space.intersect(single_block_subspace(two_n, n, false))};
  if (out.g0.dim() + out.g1.dim() != der.dim())
    throw ConsistencyError("graded split does not exhaust der for " + g.name());
  if (!bracket_closed(out.g0, out.g0, out.g0.space) ||
      !bracket_closed(out.g0, out.g1, out.g1.space) ||
      !bracket_closed(out.g1, out.g1, out.g0.space))
    throw ConsistencyError("graded closure fails for " + g.name());
  if (out.q_embedded.dim() + out.psi_embedded.dim() != out.g1.dim())
    throw ConsistencyError("G1 does not split into Q and Psi for " + g.name());
  OperatorSpace q{two_n, out.q_embedded}, psi{two_n, out.psi_embedded};
  auto zero = Subspace(two_n * two_n);
  if (!bracket_closed(q, q, zero) || !bracket_closed(psi, psi, zero))
    throw ConsistencyError("Q or Psi embedded subspace is not abelian for " + g.name());
  return out;
}

bool xi_decomposition_check(const LieAlgebra& g) {
  if (!g.is_cotangent())
    throw NotCotangent("xi decomposition needs the g/g* block structure");
  const std::size_t n = *g.cotangent_base_dim();
  // Rebuild the base algebra from the top-left bracket block.
  std::vector<LieAlgebra::BracketEntry> base_table;
  for (const auto& e : g.bracket_table()) {
    if (e.i >= n || e.j >= n) continue;
    base_table.push_back(
        {e.i, e.j, std::vector<Rational>(e.coords.begin(),
                                         e.coords.begin() + static_cast<std::ptrdiff_t>(n))});
  }
  LieAlgebra base("base", n, std::move(base_table));
  OperatorSpace der = derivations(g);
  OperatorSpace j_space = adjoint_invariant_J(base);

  for (std::size_t b = 0; b < der.dim(); ++b) {
    Matrix phi = der.basis_op(b);
    Matrix alpha(n, n), xi(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        alpha(r, c) = phi(r, c);
        xi(r, c) = phi(n + r, n + c);
      }
    // [xi, ad*_{e_i}] = ad*_{alpha(e_i)}
    for (std::size_t i = 0; i < n; ++i) {
      Matrix coad_alpha_ei(n, n);
      for (std::size_t r = 0; r < n; ++r)
        if (alpha(r, i) != 0) coad_alpha_ei = coad_alpha_ei + base.coad_matrix(r) * alpha(r, i);
      if (!(commutator(xi, base.coad_matrix(i)) == coad_alpha_ei)) return false;
    }
    if (!j_space.contains(xi.transpose() + alpha)) return false;
  }
  return true;
}

}  // namespace liecot
