#include <doctest.h>

#include <cmath>
#include <random>

#include "liecot/affine.hpp"
#include "liecot/errors.hpp"

using namespace liecot::affine;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("group law and inverse") {
  AffElement p = aff_mul({1, 0}, {2.5, -3});
  CHECK(p.a == 2.5);
  CHECK(p.b == -3);

  AffElement q = aff_mul({2, 1}, {3, 4});
  CHECK(q.a == doctest::Approx(6).epsilon(1e-15));
  CHECK(q.b == doctest::Approx(9).epsilon(1e-15));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(0.2, 4.0), any(-3.0, 3.0);
  for (int k = 0; k < 50; ++k) {
    AffElement g{pos(rng), any(rng)};
    AffElement e = aff_mul(g, aff_inv(g));
    CHECK(std::abs(e.a - 1) < 1e-12);
    CHECK(std::abs(e.b) < 1e-12);
  }
}

TEST_CASE("group exp and log") {
  AffElement z = aff_exp({0, 5});
  CHECK(z.a == 1.0);
  CHECK(z.b == 5.0);

  AffElement e = aff_exp({1, 0});
  CHECK(e.a == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(e.b == 0.0);

  AffTangent l = aff_log({1, 7.25});
  CHECK(l.xi1 == 0.0);
  CHECK(l.xi2 == 7.25);
  CHECK_THROWS_AS(aff_log({-2.0, 1.0}), liecot::DomainError);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    AffTangent xi{c(rng), c(rng)};
    AffTangent back = aff_log(aff_exp(xi));
    CHECK(std::abs(back.xi1 - xi.xi1) < 1e-12);
    CHECK(std::abs(back.xi2 - xi.xi2) < 1e-12);
  }
}

TEST_CASE("one-parameter subgroup law") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  for (int k = 0; k < 200; ++k) {
    AffTangent xi{c(rng), c(rng)};
    double s = c(rng), t = c(rng);
    AffElement lhs = aff_exp({(s + t) * xi.xi1, (s + t) * xi.xi2});
    AffElement rhs = aff_mul(aff_exp({s * xi.xi1, s * xi.xi2}),
                             aff_exp({t * xi.xi1, t * xi.xi2}));
    CHECK(std::abs(lhs.a - rhs.a) < 1e-9);
    CHECK(std::abs(lhs.b - rhs.b) < 1e-9);
  }
}

TEST_CASE("symplectic form and connection compatibility") {
  auto w = symplectic_form();
  CHECK(w[0][1] == 1.0);
  CHECK(w[1][0] == -1.0);
  CHECK(w[0][0] == 0.0);
  CHECK(w[1][1] == 0.0);

  // omega(Gamma(ei,ej), ek) = -omega(ej, [ei,ek]) with [e1,e2] = e2.
  auto gamma = aff_connection();
  auto br = [](int i, int k) {  // [e_i, e_k] coefficients on (e1, e2)
    std::array<double, 2> v{0, 0};
    if (i == 0 && k == 1) v[1] = 1;
    if (i == 1 && k == 0) v[1] = -1;
    return v;
  };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        double lhs = 0;
        for (int s = 0; s < 2; ++s) lhs += gamma[i][j][s] * w[s][k];
        auto bik = br(i, k);
        double rhs = -(w[j][0] * 0 + bik[0] * w[j][0] + bik[1] * w[j][1]);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
      }
}

TEST_CASE("affine geodesics") {
  AffElement line = aff_geodesic({0, 2.5}, 3.0);
  CHECK(line.a == 1.0);
  CHECK(line.b == 7.5);

  // xi = (1/2, 1), t = 1: (1 + ln 2, 2 ln 2).
  AffElement p = aff_geodesic({0.5, 1.0}, 1.0);
  CHECK(p.a == doctest::Approx(1.0 + std::log(2.0)).epsilon(1e-14));
  CHECK(p.b == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));

  CHECK_THROWS_AS(aff_geodesic({1.0, 0.0}, 1.0), liecot::DomainError);
  CHECK_THROWS_AS(aff_geodesic({1.0, 0.0}, 4.0), liecot::DomainError);
  CHECK_NOTHROW(aff_geodesic({1.0, 0.0}, 0.9));
  CHECK_NOTHROW(aff_geodesic({1.0, 0.0}, -1.5));
}

TEST_CASE("geodesics start with the given velocity") {
  const double h = 1e-6;
  for (double xi1 : {0.7, -1.2}) {
    for (double xi2 : {0.4, -2.0}) {
      AffElement plus = aff_geodesic({xi1, xi2}, h);
      AffElement minus = aff_geodesic({xi1, xi2}, -h);
      CHECK((plus.a - minus.a) / (2 * h) == doctest::Approx(xi1).epsilon(1e-6));
      CHECK((plus.b - minus.b) / (2 * h) == doctest::Approx(xi2).epsilon(1e-6));
    }
  }
}

TEST_CASE("geodesics and integral curves trace the same line") {
  // Both satisfy y = (xi1/xi2) x + 1 in (y, x) coordinates.
  for (double xi1 : {0.5, -0.8})
    for (double xi2 : {1.0, -0.3}) {
      for (double t : {-0.4, 0.2, 0.7}) {
        AffElement g = aff_geodesic({xi1, xi2}, t);
        CHECK(std::abs(g.a - (xi1 / xi2) * g.b - 1.0) < 1e-9);
        AffElement c = aff_exp({xi1 * t, xi2 * t});
        CHECK(std::abs(c.a - (xi1 / xi2) * c.b - 1.0) < 1e-9);
      }
    }
}

TEST_CASE("connection exponential and logarithm") {
  AffElement e0 = aff_exp_connection({0, 4.5});
  CHECK(e0.a == 1.0);
  CHECK(e0.b == 4.5);

  AffTangent l = aff_log_connection({1.0, 3.0});
  CHECK(l.xi1 == 0.0);
  CHECK(l.xi2 == 3.0);
  CHECK_THROWS_AS(aff_log_connection({2.0, 0.0}), liecot::NotInvertibleHere);
  CHECK_THROWS_AS(aff_exp_connection({1.0, 1.0}), liecot::DomainError);
}

TEST_CASE("double group law") {
  DoubleElement x{1, 1, 0, 0}, y{0, 0, 0, 1};
  DoubleElement p = double_mul(x, y);
  CHECK(p.x1 == 1.0);
  CHECK(p.x2 == 1.0);
  CHECK(p.x3 == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(p.x4 == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  DoubleElement eps = double_mul(DoubleElement{}, x);
  CHECK(eps.x1 == x.x1);
  CHECK(eps.x2 == x.x2);
  CHECK(eps.x3 == x.x3);
  CHECK(eps.x4 == x.x4);

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    DoubleElement g{c(rng), c(rng), c(rng), c(rng)};
    DoubleElement e = double_mul(g, double_inv(g));
    CHECK(std::abs(e.x1) < 1e-12);
    CHECK(std::abs(e.x2) < 1e-12);
    CHECK(std::abs(e.x3) < 1e-12);
    CHECK(std::abs(e.x4) < 1e-12);

    DoubleElement a{c(rng), c(rng), c(rng), c(rng)};
    DoubleElement b{c(rng), c(rng), c(rng), c(rng)};
    DoubleElement ab_g = double_mul(double_mul(a, b), g);
    DoubleElement a_bg = double_mul(a, double_mul(b, g));
    CHECK(std::abs(ab_g.x1 - a_bg.x1) < 1e-10);
    CHECK(std::abs(ab_g.x2 - a_bg.x2) < 1e-10);
    CHECK(std::abs(ab_g.x3 - a_bg.x3) < 1e-10);
    CHECK(std::abs(ab_g.x4 - a_bg.x4) < 1e-10);
  }
}

TEST_CASE("double exp/log branches and round trips") {
  DoubleElement z = double_exp({0, 2, 3, 4});
  CHECK(z.x1 == 0.0);
  CHECK(z.x2 == 2.0);
  CHECK(z.x3 == doctest::Approx(0.5 * 2 * 4 + 3).epsilon(1e-15));
  CHECK(z.x4 == 4.0);

  DoubleTangent l = double_log({0, 2, 3, 4});
  CHECK(l.xi3 == doctest::Approx(3 - 0.5 * 2 * 4).epsilon(1e-15));

  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  std::uniform_real_distribution<double> mag(0.1, 3.0);
  for (int k = 0; k < 500; ++k) {
    double x1 = (k % 2 ? 1 : -1) * mag(rng);
    DoubleTangent xi{x1, c(rng), c(rng), c(rng)};
    DoubleTangent back = double_log(double_exp(xi));
    CHECK(std::abs(back.xi1 - xi.xi1) < 1e-10);
    CHECK(std::abs(back.xi2 - xi.xi2) < 1e-10);
    CHECK(std::abs(back.xi3 - xi.xi3) < 1e-10);
    CHECK(std::abs(back.xi4 - xi.xi4) < 1e-10);
  }
  // Tiny xi1 goes through the Taylor window without losing digits.
  for (double x1 : {1e-7, -3e-9, 5e-5, 2e-11}) {
    DoubleTangent xi{x1, 1.7, -0.4, 2.2};
    DoubleTangent back = double_log(double_exp(xi));
    CHECK(std::abs(back.xi2 - xi.xi2) < 1e-10);
    CHECK(std::abs(back.xi3 - xi.xi3) < 1e-10);
    CHECK(std::abs(back.xi4 - xi.xi4) < 1e-10);
  }
}

TEST_CASE("Heisenberg exp/log are exact inverses") {
  auto y = heis_exp({2, 0, 3});
  CHECK(y[0] == 2.0);
  CHECK(y[1] == 3.0);
  CHECK(y[2] == 3.0);
  CHECK(heis_exp({0, 0, 0}) == std::array<double, 3>{0, 0, 0});

  // Dyadic coordinates keep every intermediate product and sum exact in
  // doubles, so the polynomial inverse identity holds with zero tolerance.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> eighth(-40, 40);
  for (int k = 0; k < 100; ++k) {
    std::array<double, 3> xi{eighth(rng) / 8.0, eighth(rng) / 8.0, eighth(rng) / 8.0};
    CHECK(heis_log(heis_exp(xi)) == xi);
  }
}

TEST_CASE("double connection and geodesic integration") {
  auto gamma = double_connection();
  CHECK(gamma[0][0][0] == -1.0);
  CHECK(gamma[1][3][2] == 1.0);
  CHECK(gamma[3][3][3] == -1.0);
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        if (gamma[i][j][k] != 0) ++nonzero;
  CHECK(nonzero == 12);

  auto still = double_geodesic_integrate({0, 0, 0, 0}, 1.0, 10);
  for (const auto& p : still)
    for (double x : p.x) CHECK(x == 0.0);

  // Fourth-order convergence: halving the step shrinks the endpoint change
  // by roughly 16x.
  DoubleTangent xi{0.3, 0.1, 0.0, 0.2};
  auto end = [&](std::size_t n) { return double_geodesic_integrate(xi, 1.0, n).back().x; };
  auto a = end(100), b = end(200), c = end(400);
  double d1 = 0, d2 = 0;
  for (int k = 0; k < 4; ++k) {
    d1 = std::max(d1, std::abs(a[k] - b[k]));
    d2 = std::max(d2, std::abs(b[k] - c[k]));
  }
  CHECK(d1 / d2 > 12.0);
  CHECK(d1 / d2 < 20.0);

  CHECK_THROWS_AS(double_geodesic_integrate(xi, 1.0, 0), liecot::InvalidParam);
}

TEST_CASE("geodesic ODE residual via finite differences") {
  // gamma''^k + Gamma_ij^k gamma'^i gamma'^j must vanish along the curve.
  auto gamma = double_connection();
  DoubleTangent xi{0.4, -0.2, 0.3, 0.1};
  auto traj = double_geodesic_integrate(xi, 1.0, 2000);
  const double h = traj[1].t - traj[0].t;
  for (std::size_t m = 500; m < 1500; m += 100) {
    std::array<double, 4> vel, acc;
    for (int k = 0; k < 4; ++k) {
      vel[k] = (traj[m + 1].x[k] - traj[m - 1].x[k]) / (2 * h);
      acc[k] = (traj[m + 1].x[k] - 2 * traj[m].x[k] + traj[m - 1].x[k]) / (h * h);
    }
    for (int k = 0; k < 4; ++k) {
      double res = acc[k];
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) res += gamma[i][j][k] * vel[i] * vel[j];
      CHECK(std::abs(res) < 1e-4);  // second-order finite differences
    }
  }
}

TEST_CASE("complex structure") {
  auto rep = complex_structure_checks();
  CHECK(rep.j_squared_is_minus_identity);
  CHECK(rep.not_bi_invariant);
  CHECK(rep.j_of_bracket == std::array<double, 4>{0, 0, -1, 0});
  CHECK(rep.bracket_of_j == std::array<double, 4>{0, 0, 0, 0});

  auto j = complex_structure_identity();
  CHECK(j[3][0] == 1.0);   // j e1 = e4
  CHECK(j[2][1] == -1.0);  // j e2 = -e3
  CHECK(j[1][2] == 1.0);   // j e3 = e2
  CHECK(j[0][3] == -1.0);  // j e4 = -e1

  (void)kPi;
}
