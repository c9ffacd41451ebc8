#pragma once

// Theta-type kernels phi_w / psi_w and their modular relations, two
// sinh-damped Fresnel-type evaluations, the reciprocal-gamma quadruple
// integral, the Bessel product integral over the order, and the Xi-function
// transforms.

#include <complex>

#include "rverify/outcome.hpp"
#include "rverify/quadrature.hpp"

namespace rverify::analytic {

using cdouble = std::complex<double>;

// Real w > 0 only.
struct ThetaKernelParams {
  cdouble t;
  double w;
};

// int_0^inf cos(pi t x)/cosh(pi x) e^{-pi w x^2} dx
cdouble phi_w(const ThetaKernelParams& p);
// int_0^inf sin(pi t x)/sinh(pi x) e^{-pi w x^2} dx
cdouble psi_w(const ThetaKernelParams& p);

// phi_w(t) against w^{-1/2} e^{-pi t^2/(4w)} psi_{1/w}(i t/w), as displayed.
Sides modular1_sides(double t, double w);
// the same right side with phi_{1/w} in place of psi_{1/w}
Sides modular1_phi_sides(double t, double w);
// e^{pi t^2/(4w)} (1/2 + psi_w(t)) against e^{pi (t+w)^2/(4w)} phi_w(t + w)
Sides modular2_sides(double t, double w);

// int_0^inf sin(2 pi t x)/sinh(pi x) cos(pi x^2) dx vs (cosh pi t - cos pi t^2)/(2 sinh pi t)
Sides mustafy_cos_sides(double t);
// int_0^inf sin(2 pi t x)/sinh(pi x) sin(pi x^2) dx vs sin(pi t^2)/(2 sinh pi t)
Sides mustafy_sin_sides(double t);
struct ResidualPair {
  double cos_residual;
  double sin_residual;
};
ResidualPair mustafy_pair_residual(double t);

// alpha + beta + gamma + delta = 4
struct GammaQuadParams {
  double alpha, beta, gamma, delta;
};

// int_R cos(pi(x + beta + gamma)) / (G(alpha+x) G(beta-x) G(gamma+2x) G(delta-2x)) dx
quad::QuadResult gamma_quad_integral(const GammaQuadParams& p);
// 1/(2 G(gamma+delta-1) G(2 alpha+delta-2) G(2 beta+gamma-2)), 0 at a pole
double gamma_quad_rhs(const GammaQuadParams& p);

// int_R J_{alpha+w}(x)/x^{alpha+w} J_{beta-w}(y)/y^{beta-w} dw
quad::QuadResult bessel_product_integral(double alpha, double beta, double x, double y);
// J_{alpha+beta}(sqrt(2x^2+2y^2)) / ((x^2+y^2)/2)^{(alpha+beta)/2}
double bessel_product_rhs(double alpha, double beta, double x, double y);

// e^{-n} - 4 pi e^{-3n} int_0^inf x e^{-pi x^2 e^{-4n}}/(e^{2 pi x} - 1) dx
double eq13_lhs(double n);
// (4 pi^{3/2})^{-1} int_0^inf |G((-1+it)/4)|^2 Xi(t/2) cos(nt) dt
double eq13_rhs(double n);
double riemann_eq13_residual(double n);

// int_0^inf eq13_lhs(z) cos(tz) dz
double eq12_lhs(double t);
// (8 sqrt pi)^{-1} G((-1+it)/4) G((-1-it)/4) Xi(t/2)
double eq12_rhs(double t);
double riemann_eq12_residual(double t);

// int_0^inf G((s-1+it)/4) G((s-1-it)/4) Xi((t+is)/2) Xi((t-is)/2) cos(nt)/((s+1)^2+t^2) dt
double f_ns_t_side(double n, double s);
// (4 pi)^{-(s-3)/2}/8 int_0^inf x^s b(x e^n) b(x e^{-n}) dx, b(y) = 1/(e^y-1) - 1/y
double f_ns_x_side(double n, double s);
double f_ns_residual(double n, double s);

}  // namespace rverify::analytic
