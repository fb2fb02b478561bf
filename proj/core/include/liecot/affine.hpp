#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace liecot::affine {

// Identity component of Aff(R): pairs (a, b) with a > 0 acting as
// x -> a x + b; group law (a1,b1)(a2,b2) = (a1 a2, a1 b2 + b1).
struct AffElement {
  double a = 1.0;
  double b = 0.0;
};

struct AffTangent {
  double xi1 = 0.0;
  double xi2 = 0.0;
};

AffElement aff_mul(const AffElement& p, const AffElement& q);
AffElement aff_inv(const AffElement& p);

// Group exponential / logarithm of the identity component.
AffElement aff_exp(const AffTangent& xi);
AffTangent aff_log(const AffElement& p);

// omega0(e1,e2) = 1, antisymmetric.
std::array<std::array<double, 2>, 2> symplectic_form();

// Christoffel symbols of the left-invariant symplectic connection:
// nabla_{e1}e1 = -e1, nabla_{e2}e1 = -e2, all others zero.
std::array<std::array<std::array<double, 2>, 2>, 2> aff_connection();

// Geodesic of the symplectic connection through the unit with velocity xi,
// evaluated at parameter t. For xi1 != 0 the domain is
// (1-e)/xi1 < t < (1+e)/xi1 with t != 1/xi1; DomainError outside it.
AffElement aff_geodesic(const AffTangent& xi, double t);

// Geometric exponential Exp_eps = geodesic at t = 1 (same domain in xi1),
// and its inverse, which exists only on the slice {(1, x)}.
AffElement aff_exp_connection(const AffTangent& xi);
AffTangent aff_log_connection(const AffElement& p);

// The 4-dimensional double group R x H3 in coordinates (x1, x2, x3, x4).
struct DoubleElement {
  double x1 = 0, x2 = 0, x3 = 0, x4 = 0;
};

struct DoubleTangent {
  double xi1 = 0, xi2 = 0, xi3 = 0, xi4 = 0;
};

DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y);
DoubleElement double_inv(const DoubleElement& x);
DoubleElement double_exp(const DoubleTangent& xi);
DoubleTangent double_log(const DoubleElement& x);

// Heisenberg group H3 exp/log (exact polynomial formulas).
std::array<double, 3> heis_exp(const std::array<double, 3>& xi);
std::array<double, 3> heis_log(const std::array<double, 3>& y);

// Christoffel symbols Gamma[i][j][k] of the left-invariant connection on the
// double; twelve nonzero integer entries.
using DoubleChristoffel = std::array<std::array<std::array<double, 4>, 4>, 4>;
DoubleChristoffel double_connection();

struct TrajectoryPoint {
  double t;
  std::array<double, 4> x;
};

// Fixed-step RK4 integration of the geodesic system
// gamma'' ^k + Gamma_ij^k gamma'^i gamma'^j = 0 from the unit with initial
// velocity xi. Returns steps+1 samples including t = 0.
std::vector<TrajectoryPoint> double_geodesic_integrate(const DoubleTangent& xi,
                                                       double t_end, std::size_t steps);

// Left-invariant complex structure at the identity:
// j e1 = e4, j e2 = -e3, j e3 = e2, j e4 = -e1.
std::array<std::array<double, 4>, 4> complex_structure_identity();

struct ComplexStructureReport {
  bool j_squared_is_minus_identity;
  // j[e1,e2] and [e1, j e2] in the cotangent algebra of aff(R).
  std::array<double, 4> j_of_bracket;
  std::array<double, 4> bracket_of_j;
  bool not_bi_invariant;
};

ComplexStructureReport complex_structure_checks();

}  // namespace liecot::affine
