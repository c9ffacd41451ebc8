#include "rverify/mellin.hpp"

#include <cmath>
#include <numbers>

#include "rverify/errors.hpp"
#include "rverify/qseries.hpp"
#include "rverify/specfun.hpp"

namespace rverify::mellin {

using quad::QuadResult;
using quad::Tolerance;

double master_value(const CoefficientFn& phi, double n) {
  return std::real(sf::gamma(n)) * phi(-n);
}

QuadResult mellin_integral(const RealFn& F, double n, Tolerance tol) {
  if (!(n > 0.0)) throw DomainError("mellin_integral: need n > 0");
  auto integrand = [&F, n](double x) { return std::pow(x, n - 1.0) * F(x); };
  const Tolerance half = tol.scaled(0.5);
  return quad::integrate_singular(integrand, 0.0, 1.0, half) +
         quad::integrate_semi_infinite(integrand, 1.0, half);
}

CheckOutcome master_check(const RealFn& F, const CoefficientFn& phi, double n,
                          Tolerance tol) {
  const QuadResult lhs = mellin_integral(F, n);
  CheckOutcome out = compare({lhs.real(), master_value(phi, n)}, tol);
  out.params = {{"n", n}};
  if (!lhs.converged) out.message = "quadrature not converged";
  return out;
}

Sides q_beta_sides(double s, double a, double q) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("q_beta: need 0 < s < 1");
  if (!(q > 0.0 && q <= qs::kMaxNome)) throw DomainError("q_beta: need 0 < q <= 0.5");
  auto integrand = [=](double t) {
    return std::pow(t, s - 1.0) * qs::qpochhammer_ratio(-a * t * q, -t, q);
  };
  const Tolerance tol(1e-15, 1e-13);
  const QuadResult lhs = quad::integrate_singular(integrand, 0.0, 1.0, tol) +
                         quad::integrate_semi_infinite(integrand, 1.0, tol);
  if (!lhs.converged) throw ConvergenceError("q_beta: quadrature not converged");
  const double qs1 = std::pow(q, 1.0 - s);
  const double rhs = std::numbers::pi / sf::sin_pi(s) * qs::qpochhammer_inf(qs1, q) *
                     qs::qpochhammer_inf(a * q, q) /
                     (qs::qpochhammer_inf(q, q) * qs::qpochhammer_inf(a * qs1, q));
  return {lhs.real(), rhs};
}

CheckOutcome q_beta_check(double s, double a, double q, Tolerance tol) {
  CheckOutcome out = compare(q_beta_sides(s, a, q), tol);
  out.params = {{"s", s}, {"a", a}, {"q", q}};
  return out;
}

double frullani(double f0, double finf, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("frullani: need a, b > 0");
  return (f0 - finf) * std::log(b / a);
}

QuadResult frullani_integral(const RealFn& f, double a, double b, Tolerance tol) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("frullani_integral: need a, b > 0");
  auto integrand = [&f, a, b](double x) { return (f(a * x) - f(b * x)) / x; };
  const Tolerance half = tol.scaled(0.5);
  return quad::integrate_singular(integrand, 0.0, 1.0, half) +
         quad::integrate_semi_infinite(integrand, 1.0, half);
}

QuadResult generalized_frullani_limit(const RealFn& f, const RealFn& g, double a,
                                      double b, std::span<const double> ladder) {
  if (ladder.size() < 2) throw DomainError("generalized_frullani_limit: ladder too short");
  std::vector<double> values;
  QuadResult out;
  out.converged = true;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (i > 0 && std::abs(ladder[i] * 2.0 - ladder[i - 1]) > 1e-12 * ladder[i - 1]) {
      throw DomainError("generalized_frullani_limit: ladder must halve");
    }
    const RealFn diff = [&](double x) { return f(a * x) - g(b * x); };
    const QuadResult r = mellin_integral(diff, ladder[i], Tolerance(1e-15, 1e-13));
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
    values.push_back(r.real());
  }
  // The integral is analytic in n at 0: error expansion n, n^2, n^3, ...
  const quad::Extrapolated e = quad::richardson(values, 2.0, 1.0);
  out.value = e.value;
  out.error_estimate = e.error;
  return out;
}

double generalized_frullani_rhs(double f0, double finf, double a, double b,
                                double dlog_ratio) {
  return (f0 - finf) * (std::log(b / a) + dlog_ratio);
}

double dlog_ratio_at_0(const RealFn& log_v_over_u) {
  return quad::differentiate(log_v_over_u, 0.0, 0.1).value;
}

CheckOutcome generalized_frullani_check(const RealFn& f, const RealFn& g, double f0,
                                        double finf, double a, double b,
                                        double dlog_ratio, Tolerance tol) {
  constexpr double kFar = 1e8;
  if (std::abs(f(0.0) - g(0.0)) > 1e-12 || std::abs(f(kFar) - g(kFar)) > 1e-6) {
    throw DomainError("generalized_frullani_check: f and g must share f(0) and f(inf)");
  }
  const QuadResult lhs = generalized_frullani_limit(f, g, a, b);
  CheckOutcome out =
      compare({lhs.real(), generalized_frullani_rhs(f0, finf, a, b, dlog_ratio)}, tol);
  out.params = {{"a", a}, {"b", b}};
  return out;
}

}  // namespace rverify::mellin
