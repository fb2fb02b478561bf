#include "liecot/affine.hpp"

#include <cmath>

#include "liecot/catalog.hpp"
#include "liecot/errors.hpp"
#include "liecot/lie_algebra.hpp"

namespace liecot::affine {

namespace {

constexpr double kExactZero = 1e-12;
constexpr double kTaylor = 1e-6;

// Removable-singularity factors. Below kExactZero the limit value is used,
// below kTaylor a short Taylor expansion; the expm1-based closed forms are
// cancellation-free on their own, the thresholds only guard the division.
double e1_factor(double u) {  // (e^u - 1)/u
  double au = std::abs(u);
  if (au < kExactZero) return 1.0;
  if (au < kTaylor) return 1.0 + u / 2 + u * u / 6;
  return std::expm1(u) / u;
}

double e1m_factor(double u) {  // (1 - e^{-u})/u
  double au = std::abs(u);
  if (au < kExactZero) return 1.0;
  if (au < kTaylor) return 1.0 - u / 2 + u * u / 6;
  return -std::expm1(-u) / u;
}

double f_factor(double u) {  // (u - 1 + e^{-u})/u^2
  double au = std::abs(u);
  if (au < kExactZero) return 0.5;
  if (au < kTaylor) return 0.5 - u / 6 + u * u / 24;
  return (u + std::expm1(-u)) / (u * u);
}

double g_factor(double u) {  // u/(e^u - 1)
  double au = std::abs(u);
  if (au < kExactZero) return 1.0;
  if (au < kTaylor) return 1.0 - u / 2 + u * u / 12;
  return u / std::expm1(u);
}

double h_factor(double u) {  // u/(1 - e^{-u})
  double au = std::abs(u);
  if (au < kExactZero) return 1.0;
  if (au < kTaylor) return 1.0 + u / 2 + u * u / 12;
  return -u / std::expm1(-u);
}

// (u/(e^{-u}-1) + 1)/(e^u - 1). The numerator cancels to -u/2 + O(u^2), so
// the closed form loses ~|log eps/u| digits; a wider Taylor window than for
// the factors above is needed to hold 1e-10 round trips.
double k_factor(double u) {
  double au = std::abs(u);
  if (au < kExactZero) return -0.5;
  if (au < 1e-4) return -0.5 + u / 6 - u * u * u / 180;
  return (u / std::expm1(-u) + 1.0) / std::expm1(u);
}

double log1p_over(double u) {  // log(1+u)/u
  double au = std::abs(u);
  if (au < kExactZero) return 1.0;
  if (au < kTaylor) return 1.0 - u / 2 + u * u / 3;
  return std::log1p(u) / u;
}

}  // namespace

AffElement aff_mul(const AffElement& p, const AffElement& q) {
  return {p.a * q.a, p.a * q.b + p.b};
}

AffElement aff_inv(const AffElement& p) { return {1.0 / p.a, -p.b / p.a}; }

AffElement aff_exp(const AffTangent& xi) {
  if (std::abs(xi.xi1) < kExactZero) return {1.0, xi.xi2};
  return {std::exp(xi.xi1), xi.xi2 * e1_factor(xi.xi1)};
}

AffTangent aff_log(const AffElement& p) {
  if (p.a <= 0.0) throw DomainError("affine logarithm needs a > 0");
  double u = p.a - 1.0;
  if (std::abs(u) < kExactZero) return {0.0, p.b};
  // xi1 = ln a, xi2 = b * ln a/(a-1)
  return {std::log1p(u), p.b * log1p_over(u)};
}

std::array<std::array<double, 2>, 2> symplectic_form() {
  return {{{0.0, 1.0}, {-1.0, 0.0}}};
}

std::array<std::array<std::array<double, 2>, 2>, 2> aff_connection() {
  std::array<std::array<std::array<double, 2>, 2>, 2> gamma{};
  gamma[0][0][0] = -1.0;  // nabla_{e1}e1 = -e1
  gamma[1][0][1] = -1.0;  // nabla_{e2}e1 = -e2
  return gamma;
}

AffElement aff_geodesic(const AffTangent& xi, double t) {
  if (std::abs(xi.xi1) < kExactZero) return {1.0, xi.xi2 * t};
  double u = xi.xi1 * t;
  if (u == 1.0 || u <= 1.0 - std::exp(1.0) || u >= 1.0 + std::exp(1.0))
    throw DomainError("geodesic parameter outside (1-e)/xi1 < t < (1+e)/xi1");
  // gamma(t) = (1 - ln|xi1 t - 1|, -(xi2/xi1) ln|xi1 t - 1|), the solution of
  // gamma1'' = gamma1'^2, gamma2'' = gamma1' gamma2' with gamma(0) = (1,0),
  // gamma'(0) = xi.
  double l = u < 1.0 ? std::log1p(-u) : std::log(u - 1.0);
  if (u < 1.0) return {1.0 - l, -xi.xi2 * t * (l / u)};
  return {1.0 - l, -(xi.xi2 / xi.xi1) * l};
}

AffElement aff_exp_connection(const AffTangent& xi) { return aff_geodesic(xi, 1.0); }

AffTangent aff_log_connection(const AffElement& p) {
  if (p.a != 1.0)
    throw NotInvertibleHere("the connection logarithm exists only on {(1, x)}");
  return {0.0, p.b};
}

DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y) {
  double ep = std::exp(x.x1), em = std::exp(-x.x1);
  return {x.x1 + y.x1, x.x2 + y.x2 * ep, x.x3 + y.x3 + x.x2 * y.x4 * em,
          x.x4 + y.x4 * em};
}

DoubleElement double_inv(const DoubleElement& x) {
  return {-x.x1, -x.x2 * std::exp(-x.x1), -x.x3 + x.x2 * x.x4, -x.x4 * std::exp(x.x1)};
}

DoubleElement double_exp(const DoubleTangent& xi) {
  if (std::abs(xi.xi1) < kExactZero)
    return {0.0, xi.xi2, 0.5 * xi.xi2 * xi.xi4 + xi.xi3, xi.xi4};
  double u = xi.xi1;
  return {u, xi.xi2 * e1_factor(u), xi.xi3 + xi.xi2 * xi.xi4 * f_factor(u),
          xi.xi4 * e1m_factor(u)};
}

DoubleTangent double_log(const DoubleElement& x) {
  if (std::abs(x.x1) < kExactZero)
    return {0.0, x.x2, x.x3 - 0.5 * x.x2 * x.x4, x.x4};
  double u = x.x1;
  return {u, x.x2 * g_factor(u), x.x3 + x.x2 * x.x4 * k_factor(u), x.x4 * h_factor(u)};
}

std::array<double, 3> heis_exp(const std::array<double, 3>& xi) {
  return {xi[0], xi[1] + 0.5 * xi[0] * xi[2], xi[2]};
}

std::array<double, 3> heis_log(const std::array<double, 3>& y) {
  return {y[0], y[1] - 0.5 * y[0] * y[2], y[2]};
}

DoubleChristoffel double_connection() {
  DoubleChristoffel gamma{};
  gamma[0][0][0] = -1;
  gamma[0][2][1] = 1;
  gamma[0][3][0] = -1;
  gamma[0][3][3] = -1;
  gamma[1][0][1] = -1;
  gamma[1][3][2] = 1;
  gamma[2][0][1] = 1;
  gamma[2][3][2] = -1;
  gamma[3][0][0] = -1;
  gamma[3][0][3] = -1;
  gamma[3][1][2] = 1;
  gamma[3][3][3] = -1;
  return gamma;
}

namespace {

struct State {
  std::array<double, 4> x;
  std::array<double, 4> v;
};

State deriv(const DoubleChristoffel& gamma, const State& s) {
  State d;
  d.x = s.v;
  for (int k = 0; k < 4; ++k) {
    double acc = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) acc += gamma[i][j][k] * s.v[i] * s.v[j];
    d.v[k] = -acc;
  }
  return d;
}

State axpy(const State& s, double h, const State& d) {
  State r;
  for (int k = 0; k < 4; ++k) {
    r.x[k] = s.x[k] + h * d.x[k];
    r.v[k] = s.v[k] + h * d.v[k];
  }
  return r;
}

}  // namespace

std::vector<TrajectoryPoint> double_geodesic_integrate(const DoubleTangent& xi,
                                                       double t_end,
                                                       std::size_t steps) {
  if (steps < 1) throw InvalidParam("steps must be >= 1");
  const DoubleChristoffel gamma = double_connection();
  State s{{0, 0, 0, 0}, {xi.xi1, xi.xi2, xi.xi3, xi.xi4}};
  const double h = t_end / static_cast<double>(steps);
  std::vector<TrajectoryPoint> out;
  out.reserve(steps + 1);
  out.push_back({0.0, s.x});
  for (std::size_t n = 0; n < steps; ++n) {
    State k1 = deriv(gamma, s);
    State k2 = deriv(gamma, axpy(s, h / 2, k1));
    State k3 = deriv(gamma, axpy(s, h / 2, k2));
    State k4 = deriv(gamma, axpy(s, h, k3));
    for (int k = 0; k < 4; ++k) {
      s.x[k] += h / 6 * (k1.x[k] + 2 * k2.x[k] + 2 * k3.x[k] + k4.x[k]);
      s.v[k] += h / 6 * (k1.v[k] + 2 * k2.v[k] + 2 * k3.v[k] + k4.v[k]);
    }
    out.push_back({h * static_cast<double>(n + 1), s.x});
  }
  return out;
}

std::array<std::array<double, 4>, 4> complex_structure_identity() {
  // Columns are images of the basis: j e1 = e4, j e2 = -e3, j e3 = e2,
  // j e4 = -e1.
  return {{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}};
}

ComplexStructureReport complex_structure_checks() {
  auto j = complex_structure_identity();
  bool minus_id = true;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      double s = 0;
      for (int k = 0; k < 4; ++k) s += j[r][k] * j[k][c];
      if (s != (r == c ? -1.0 : 0.0)) minus_id = false;
    }

  // Witness in the cotangent algebra of aff(R): j[e1,e2] vs [e1, j e2].
  LieAlgebra d = cotangent(aff_r());
  auto apply_j = [&](const Vector& v) {
    std::vector<Rational> out(4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (j[r][c] != 0) out[static_cast<std::size_t>(r)] +=
            Rational(static_cast<long>(j[r][c])) * v[static_cast<std::size_t>(c)];
    return d.vector(std::move(out));
  };
  Vector e1 = d.basis_vector(0), e2 = d.basis_vector(1);
  Vector lhs = apply_j(bracket(e1, e2));
  Vector rhs = bracket(e1, apply_j(e2));
  ComplexStructureReport rep{};
  rep.j_squared_is_minus_identity = minus_id;
  for (int k = 0; k < 4; ++k) {
    rep.j_of_bracket[k] =
        static_cast<double>(lhs[static_cast<std::size_t>(k)].convert_to<double>());
    rep.bracket_of_j[k] =
        static_cast<double>(rhs[static_cast<std::size_t>(k)].convert_to<double>());
  }
  rep.not_bi_invariant = !(lhs == rhs);
  return rep;
}

}  // namespace liecot::affine
