#pragma once

// Master Theorem, Frullani's theorem and its generalized limit form.
//
// Growth hypotheses on the coefficient functions are not checked: only the
// curated coefficient functions used by the checks are certified.

#include <functional>
#include <span>
#include <vector>

#include "rverify/outcome.hpp"
#include "rverify/quadrature.hpp"

namespace rverify::mellin {

// phi with F(x) = sum_k phi(k) (-x)^k / k!, continued to non-integer k.
using CoefficientFn = std::function<double(double)>;
using RealFn = std::function<double(double)>;

// Gamma(n) phi(-n). Throws PoleError at a pole of Gamma.
double master_value(const CoefficientFn& phi, double n);

// int_0^inf x^{n-1} F(x) dx, split at 1 (tanh-sinh, then exp-sinh).
quad::QuadResult mellin_integral(const RealFn& F, double n,
                                 quad::Tolerance tol = {1e-14, 1e-12});

CheckOutcome master_check(const RealFn& F, const CoefficientFn& phi, double n,
                          quad::Tolerance tol);

// int_0^inf t^{s-1} (-a t q; q)_inf / (-t; q)_inf dt against
// pi/sin(pi s) (q^{1-s};q)(aq;q) / ((q;q)(a q^{1-s};q)).
Sides q_beta_sides(double s, double a, double q);
CheckOutcome q_beta_check(double s, double a, double q, quad::Tolerance tol);

// (f0 - finf) log(b/a)
double frullani(double f0, double finf, double a, double b);
// int_0^inf (f(ax) - f(bx)) / x dx
quad::QuadResult frullani_integral(const RealFn& f, double a, double b,
                                   quad::Tolerance tol = {1e-14, 1e-12});

inline const std::vector<double> kFrullaniLadder = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625};
inline const std::vector<double> kFrullaniLadderAlt = {0.16, 0.08, 0.04, 0.02, 0.01, 0.005};

// lim_{n->0+} int_0^inf x^{n-1} (f(ax) - g(bx)) dx, by Richardson
// extrapolation in n over a halving ladder.
quad::QuadResult generalized_frullani_limit(const RealFn& f, const RealFn& g,
                                            double a, double b,
                                            std::span<const double> ladder = kFrullaniLadder);

// (f0 - finf) (log(b/a) + d/ds log(v(s)/u(s)) at s = 0)
double generalized_frullani_rhs(double f0, double finf, double a, double b,
                                double dlog_ratio_at_0);

// The correction term by numerical differentiation of log(v/u).
double dlog_ratio_at_0(const RealFn& log_v_over_u);

// Asserts f(0) = g(0) and f(inf) = g(inf) at x = 0 and x = 1e8.
CheckOutcome generalized_frullani_check(const RealFn& f, const RealFn& g, double f0,
                                        double finf, double a, double b,
                                        double dlog_ratio, quad::Tolerance tol);

}  // namespace rverify::mellin
