#include <doctest.h>

#include "liecot/catalog.hpp"
#include "liecot/errors.hpp"
#include "liecot/forms.hpp"

using namespace liecot;

namespace {

// B([x,y],z) + B(y,[x,z]) = 0 on all basis triples, evaluated directly.
bool form_is_invariant(const LieAlgebra& g, const Matrix& b) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        auto cij = g.bracket_basis(i, j);
        auto cik = g.bracket_basis(i, k);
        for (std::size_t t = 0; t < n; ++t) s += cij[t] * b(t, k) + cik[t] * b(j, t);
        if (s != 0) return false;
      }
  return true;
}

Matrix sparse_sym(std::size_t n, std::initializer_list<std::array<std::size_t, 2>> at,
                  std::initializer_list<Rational> vals) {
  Matrix m(n, n);
  auto v = vals.begin();
  for (const auto& rc : at) {
    m(rc[0], rc[1]) = *v;
    m(rc[1], rc[0]) = *v;
    ++v;
  }
  return m;
}

}  // namespace

TEST_CASE("invariant form spaces with their named generators") {
  // T*aff(R): a * duality + b * x1 y1.
  LieAlgebra daff = cotangent(aff_r());
  FormSpace fs = invariant_forms(daff);
  CHECK(fs.dim() == 2);
  CHECK(fs.contains(duality_pairing(daff).matrix()));
  CHECK(fs.contains(sparse_sym(4, {{0, 0}}, {Rational(1)})));
  for (std::size_t k = 0; k < fs.dim(); ++k) {
    CHECK(fs.basis_form(k).is_symmetric());
    CHECK(form_is_invariant(daff, fs.basis_form(k)));
  }

  CHECK(invariant_forms(abelian(3)).dim() == 6);

  // The oscillator algebra itself: k * mu_lambda + m * x^-1 y^-1.
  for (const Rational& lam : {Rational(1), Rational(3)}) {
    LieAlgebra osc = oscillator(lam);
    FormSpace f = invariant_forms(osc);
    CHECK(f.dim() == 2);
    Matrix mu = sparse_sym(4, {{0, 1}, {2, 2}, {3, 3}},
                           {Rational(1), 1 / lam, 1 / lam});
    CHECK(f.contains(mu));
    CHECK(f.contains(sparse_sym(4, {{0, 0}}, {Rational(1)})));
  }
}

TEST_CASE("T*oscillator carries the five-parameter family") {
  LieAlgebra d = cotangent(oscillator(Rational(1)));
  FormSpace fs = invariant_forms(d);
  CHECK(fs.dim() == 5);
  // Generators in the (A,B,C,D,E) ordering: duality, mu_lambda extended by
  // zero, the x^-1 g^0 + y^-1 f^0 pairing, x^-1 y^-1, f^0 g^0.
  CHECK(fs.contains(duality_pairing(d).matrix()));
  CHECK(fs.contains(sparse_sym(8, {{0, 1}, {2, 2}, {3, 3}},
                               {Rational(1), Rational(1), Rational(1)})));
  CHECK(fs.contains(sparse_sym(8, {{0, 5}}, {Rational(1)})));
  CHECK(fs.contains(sparse_sym(8, {{0, 0}}, {Rational(1)})));
  CHECK(fs.contains(sparse_sym(8, {{5, 5}}, {Rational(1)})));
}

TEST_CASE("duality pairing properties") {
  for (const LieAlgebra& g : {abelian(2), aff_r(), sl2(), so3(), h3()}) {
    LieAlgebra d = cotangent(g);
    BilinearForm mu0 = duality_pairing(d);
    CHECK(mu0.matrix().is_symmetric());
    CHECK(form_inertia(mu0) == Inertia{g.dim(), g.dim(), 0});
    // Total isotropy of both halves.
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(mu0.matrix()(i, j) == 0);
        CHECK(mu0.matrix()(n + i, n + j) == 0);
      }
  }
  CHECK_THROWS_AS(duality_pairing(sl2()), NotCotangent);
}

TEST_CASE("orthogonal structure predicate") {
  CHECK(is_orthogonal_structure(killing_form(sl2())));
  CHECK(is_orthogonal_structure(killing_form(so3())));
  CHECK_FALSE(is_orthogonal_structure(killing_form(aff_r())));  // degenerate
  CHECK_FALSE(is_orthogonal_structure(BilinearForm(sl2(), Matrix(3, 3))));
}

TEST_CASE("theta equivariance") {
  CHECK(theta_equivariance_check(killing_form(sl2())));
  CHECK(theta_equivariance_check(BilinearForm(abelian(3), Matrix::identity(3))));
  CHECK_FALSE(theta_equivariance_check(BilinearForm(aff_r(), Matrix::identity(2))));
  CHECK_THROWS_AS(theta_equivariance_check(killing_form(aff_r())), Degenerate);
}

TEST_CASE("form inertia examples") {
  LieAlgebra daff = cotangent(aff_r());
  BilinearForm mu10 = duality_pairing(daff);
  CHECK(form_inertia(mu10) == Inertia{2, 2, 0});
  CHECK(form_inertia(killing_form(sl2())) == Inertia{2, 1, 0});

  // mu_{a,b} grid on T*aff(R) keeps signature (2,2).
  for (const Rational& a : {Rational(1), Rational(-1), Rational(3)})
    for (const Rational& b : {Rational(-2), Rational(0), Rational(5)}) {
      Matrix m = duality_pairing(daff).matrix() * a + sparse_sym(4, {{0, 0}}, {b});
      CHECK(inertia(m) == Inertia{2, 2, 0});
    }
}

TEST_CASE("degenerate invariant forms have ideal-stable radicals") {
  for (const LieAlgebra& g : {aff_r(), h3(), oscillator(Rational(1))}) {
    FormSpace fs = invariant_forms(g);
    for (std::size_t k = 0; k < fs.dim(); ++k) {
      Matrix b = fs.basis_form(k);
      Subspace rad = nullspace(b);
      if (rad.dim() == 0) continue;
      for (std::size_t v = 0; v < rad.dim(); ++v)
        for (std::size_t i = 0; i < g.dim(); ++i) {
          auto w = g.ad_matrix(i).apply(rad.basis().row(v));
          for (const auto& x : b.apply(w)) CHECK(x == 0);
        }
    }
  }
}

TEST_CASE("skew prederivations") {
  // Abelian with the identity form: all antisymmetric matrices.
  LieAlgebra ab = abelian(4);
  OperatorSpace skew = skew_prederivations(ab, BilinearForm(ab, Matrix::identity(4)));
  CHECK(skew.dim() == 6);
  for (std::size_t k = 0; k < skew.dim(); ++k) {
    Matrix m = skew.basis_op(k);
    CHECK((m + m.transpose()).is_zero());
  }

  LieAlgebra dsl2 = cotangent(sl2());
  OperatorSpace s = skew_prederivations(dsl2, duality_pairing(dsl2));
  CHECK(s.dim() == 6);
  CHECK(s.space == inner_derivations(dsl2).space);
  CHECK(prederivations(dsl2).space.contains(s.space));

  CHECK_THROWS_AS(skew_prederivations(sl2(), BilinearForm(sl2(), Matrix(3, 3))),
                  NotOrthogonal);
}

TEST_CASE("semisimple cotangent form family") {
  CHECK(semisimple_cotangent_form_family_check(sl2()));
  CHECK(semisimple_cotangent_form_family_check(so3()));
  CHECK_THROWS_AS(semisimple_cotangent_form_family_check(oscillator(Rational(1))),
                  NotSimple);
  CHECK_THROWS_AS(semisimple_cotangent_form_family_check(direct_sum(sl2(), so3())),
                  NotSimple);
}
