#pragma once

// Integrals of theta products f(-t) = (t;t)_inf tied to modular equations of
// degrees 5, 14 and 35, and the differential equation for
// lambda(q) = q f^6(-q^5)/f^6(-q).

namespace rverify::lostnb {

struct GoldenConstants {
  double eps;  // (sqrt5 + 1)/2
  double m5;   // eps^{-5} 5^{-3/2}
  double c14;  // sqrt(13 + 16 sqrt2)/7
  double m14;  // (16 sqrt2 - 13)/(32 sqrt2)
};

const GoldenConstants& golden_constants();

// q lambda'(q) / (sqrt q f^2(-q) f^2(-q^5) sqrt(125 l^3 + 22 l^2 + l)) - 1
double lemma_dlambda_residual(double q);

// 5^{3/4} int_0^q f^2(-t) f^2(-t^5)/sqrt t dt
double entry5_lhs(double q);
// int_{acos((eps u)^{5/2})}^{pi/2} dphi/sqrt(1 - m5 sin^2 phi), u the
// Rogers-Ramanujan continued fraction. Throws DomainError if (eps u)^{5/2} > 1.
double entry5_rhs1(double q);
// F(2 atan(5^{3/4} sqrt q f^3(-q^5)/f^3(-q)), m5)
double entry5_rhs2(double q);

struct Entry5Residuals {
  double first;   // lhs - rhs1
  double second;  // lhs - rhs2
};
Entry5Residuals entry5_residuals(double q);

// C solved from u^5 + u^{-5} = f^3(-q)/(2 sqrt q f^3(-q^5)) (C + I1 + 125 I2),
// I1 = int_q^1 f^8(-t)/f^4(-t^5) t^{-3/2} dt, I2 = int_0^q f^8(-t^5)/f^4(-t) sqrt t dt.
// I1 is integrated to 0.9; the remainder on [0.9, 1) is bounded by
// 0.1 f^4(-0.9) 0.9^{-3/2} (f(-t) <= f(-t^5) and f(-t) decreases) and that
// bound must stay below 1e-12.
double entry5_constant_C(double q);

// int_0^q f(-t) f(-t^2) f(-t^7) f(-t^14) dt
double entry14_lhs(double q);
// (F(acos c, m14) - F(acos(c (1+v)/(1-v)), m14)) / sqrt(8 sqrt2)
double entry14_rhs(double q);
double entry14_residual(double q);

// int_0^q t f(-t) f(-t^5) f(-t^7) f(-t^35) dt
double entry35_lhs(double q);
// int_0^v t dt / sqrt((1 + t - t^2)(1 - 5t - 9t^3 - 5t^5 - t^6)); the sextic
// is checked positive on [0, v] by sampling.
double entry35_rhs(double q);
double entry35_residual(double q);

}  // namespace rverify::lostnb
