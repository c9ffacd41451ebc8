#pragma once

// Incomplete elliptic integral identities: the addition theorem under the
// cotangent condition, the arccos and double-integral entries, a cubic
// modulus transformation, and inversion formulas for G(v) = int dt/sqrt(1+t^4)
// and the lemniscate integral F(v) = int dt/sqrt(1-t^4).
//
// Moduli are passed as m = k^2 throughout.

namespace rverify::elliptic {

// Which radical the addition condition uses: sqrt(1 - x sin^2 g) as displayed,
// or sqrt(1 - x^2 sin^2 g) as the dn(u + v) form suggests.
enum class RadicalVariant { kX, kXSquared };

const char* to_string(RadicalVariant v);

struct AdditionResult {
  double gamma;     // root of the condition in (0, pi)
  double residual;  // u + v - w with all three at m = x^2
};

// Solves cot a cot b = cos g/(sin a sin b) + sqrt(1 - X sin^2 g) for g.
// Throws UnsupportedRange("condition infeasible at these parameters") when
// no sign change exists on (0, pi).
AdditionResult addition_check(double alpha, double beta, double x, RadicalVariant variant);

// (pi/2) int_0^{pi/2} dp/sqrt(1 + x sin p) - int_0^{pi/2} acos(x sin^2 p)/sqrt(1 - x^2 sin^4 p) dp
double entry_arccos_residual(double x);

// Iterated integral, inner over theta, outer over phi.
double entry_double_integral_lhs(double x);
// (K(m+)^2 - K(m-)^2)/2 with m+- = (1 +- x)/2
double entry_double_integral_rhs(double x);
double entry_double_integral_residual(double x);

// beta from (1+sin b)/(1-sin b) = (1+sin a)/(1-sin a) ((1+x sin a)/(1-x sin a))^2
double page172_beta(double x, double alpha);
// (1+2x) F(a, x^3 (2+x)/(1+2x)) - F(b, x ((2+x)/(1+2x))^3)
double entry_page172_residual(double x, double alpha);

// v, its angle theta and the normalization mu; theta mu/2 = G(v) for the
// quartic case, theta mu/sqrt 2 = F(v) for the lemniscate case.
struct InversionState {
  double v;
  double theta;
  double mu;
};

double quartic_G(double v);
double quartic_mu();
InversionState quartic_state(double v);
// 2 atan v - theta - sum sin(2 n theta)/(n cosh n pi)
double quartic_inversion_residual(double v);

// Quadrature with the square-root endpoint handled at v = 1.
double lemniscate_F(double v);
// sum (1/2)_n v^{4n+1}/(n! (4n+1)), algebraic tail extrapolated at v = 1
double lemniscate_F_series(double v);
double lemniscate_mu();
InversionState lemniscate_state(double v);
// log v + pi/6 - log 2/2 + sum (1/4)_n v^{4n}/((3/4)_n 4n)
double lemniscate_inversion_lhs(double v);
// log sin theta + theta^2/(2 pi) - 2 sum cos(2 n theta)/(n (e^{2 pi n} - 1))
double lemniscate_inversion_rhs(double v);
double lemniscate_inversion_residual(double v);

// F(sqrt2 x / sqrt(1 + x^4)) - sqrt2 G(x)
double lemniscate_doubling_residual(double x);

}  // namespace rverify::elliptic
