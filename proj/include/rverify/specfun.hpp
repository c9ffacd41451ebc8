#pragma once

// Gamma family, Bessel J of real order, dilogarithm, elliptic integrals of the
// first kind, zeta / xi / Xi and Pochhammer symbols, all in double precision.
// Failures are thrown (PoleError, UnsupportedRange, OverflowError); no
// function here returns inf or nan for an argument in its documented domain.

#include <complex>

namespace rverify::sf {

using cdouble = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);
cdouble sin_pi(cdouble z);

// Analytic branch of log Gamma: continuous off the negative real axis and
// real for z > 0. Throws PoleError at 0, -1, -2, ...
cdouble ln_gamma(cdouble z);
// exp(ln_gamma(z)); throws OverflowError when not representable.
cdouble gamma(cdouble z);

struct SignedLog {
  double log_abs = 0.0;
  int sign = 0;  // 0 encodes an exact zero
};

// log|1/Gamma(x)| and the sign of 1/Gamma(x). Entire: sign = 0 at x = 0, -1, ...
SignedLog log_recip_gamma(double x);
// 1/Gamma(x) for every real x; exactly 0 at the nonpositive integers.
double recip_gamma(double x);

// Psi(x) for x > 0.
double digamma(double x);

// J_nu(x) / x^nu, an entire function of both arguments (any real nu).
double bessel_j_scaled(double nu, double x);
// J_nu(x) for nu in [-5, 40], 0 < x <= 12.
double bessel_j(double nu, double x);

// Li2(x) = -int_0^x log(1-w)/w dw for x <= 1.
double li2(double x);

double agm(double a, double b);
// Complete integral K(m) = F(pi/2, m), 0 <= m < 1 (m = k^2).
double elliptic_k(double m);
// F(phi, m) = int_0^phi (1 - m sin^2 t)^{-1/2} dt, 0 <= m < 1, any real phi.
double elliptic_f(double phi, double m);

// Riemann zeta on Re s > -2, s != 1.
cdouble zeta(cdouble s);
// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s); entire, xi(0) = xi(1) = 1/2.
cdouble xi(cdouble s);
// Xi(t) = xi(1/2 + i t).
cdouble xi_big(cdouble t);

// Rising factorial (a)_n.
double pochhammer(double a, int n);

}  // namespace rverify::sf
