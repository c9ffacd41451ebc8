#pragma once

// The log-integral phi(n) of the reciprocal-pair question, its generalization
// to an arbitrary increasing g, the Gaussian reciprocity pair, and the cosine
// transform phi(n) = int_0^inf cos(nx)/(e^{2 pi sqrt x} - 1) dx with its sine
// companion and Gauss-sum closed form.

#include <functional>

#include "rverify/outcome.hpp"

namespace rverify::classic {

// int_0^1 log u dv/v with v = u^n - u^{n-1}, integrated in u. n >= 0.
double q783_phi(double n);
// phi(n) + phi(1/n) - pi^2/6
double q783_functional_residual(double n);
// Upper limit u* with u*^{n-1}(u* - 1) = 1, n > 0.
double q783_upper_limit(double n);

// g enters through log g and g'/g so that rapidly growing g does not
// overflow. Requires g(0) = 1, g increasing and unbounded.
struct GrowthFunction {
  std::function<double(double)> log_g;
  std::function<double(double)> dlog_g;
};

GrowthFunction g_linear();     // 1 + t
GrowthFunction g_quadratic();  // 1 + t + t^2
GrowthFunction g_cosh();       // cosh t

// int_0^1 log g(t) dv/v with v(t) = g^n(t)/g(1/t), integrated in t over
// (0, t*] where v(t*) = 1. Throws DomainError if v is not increasing on a
// sample grid. Convergence of the integral is assumed.
double berndt_evans_phi(const GrowthFunction& g, double n);
// phi(n) + phi(1/n) - 2 phi(1), finite even when each phi diverges at t = 0
double berndt_evans_residual(const GrowthFunction& g, double n);

// sqrt(alpha) int_0^inf e^{-x^2} / cosh(alpha x) dx
double q295_side(double alpha);

// int_0^inf cos(nx)/(e^{2 pi sqrt x} - 1) dx, n >= 0, as
// 2 int_0^ymax y cos(n y^2)/(e^{2 pi y} - 1) dy.
double ram_phi(double n);
// the same transform with sin(nx)
double ram_sine(double n);
// sine transform vs phi(n) - 1/(2n) + phi(pi^2/n) sqrt(2 pi^3/n^3)
Sides ram_sine_sides(double n);
double ram_sine_transform(double n);

// phi(pi a/b) for odd a, b >= 1 by the finite-sum closed form.
double ram_phi_gauss(int a, int b);

}  // namespace rverify::classic
