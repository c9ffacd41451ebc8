#include "rverify/identities/analytic.hpp"

#include <cmath>
#include <numbers>

#include "rverify/errors.hpp"
#include "rverify/specfun.hpp"

namespace rverify::analytic {

using quad::QuadResult;
using quad::Tolerance;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kI{0.0, 1.0};

template <class R>
R require(const QuadResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": quadrature not converged");
  if constexpr (std::is_same_v<R, double>) {
    return r.real();
  } else {
    return r.value;
  }
}

void check_kernel(const ThetaKernelParams& p) {
  if (!(p.w > 0.0)) throw DomainError("theta kernel: need real w > 0");
  if (std::abs(p.t.imag()) > 2.0 * p.w + 2.0) {
    throw DomainError("theta kernel: |Im t| too large for the Gaussian to dominate");
  }
}

}  // namespace

cdouble phi_w(const ThetaKernelParams& p) {
  check_kernel(p);
  const cdouble t = p.t;
  const double w = p.w;
  auto f = [t, w](double x) -> cdouble {
    if (x < 2.0) return std::cos(kPi * t * x) / std::cosh(kPi * x) * std::exp(-kPi * w * x * x);
    // cos/cosh folded into one exponent per branch; overflow-free for large x
    const double damp = -kPi * x - kPi * w * x * x;
    const cdouble e1 = std::exp(kI * kPi * t * x + damp);
    const cdouble e2 = std::exp(-kI * kPi * t * x + damp);
    return (e1 + e2) / (1.0 + std::exp(-2.0 * kPi * x));
  };
  return require<cdouble>(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-15, 1e-13)), "phi_w");
}

cdouble psi_w(const ThetaKernelParams& p) {
  check_kernel(p);
  const cdouble t = p.t;
  const double w = p.w;
  auto f = [t, w](double x) -> cdouble {
    if (x == 0.0) return t;
    if (x < 2.0) return std::sin(kPi * t * x) / std::sinh(kPi * x) * std::exp(-kPi * w * x * x);
    const double damp = -kPi * x - kPi * w * x * x;
    const cdouble e1 = std::exp(kI * kPi * t * x + damp);
    const cdouble e2 = std::exp(-kI * kPi * t * x + damp);
    return (e1 - e2) / (kI * (1.0 - std::exp(-2.0 * kPi * x)));
  };
  return require<cdouble>(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-15, 1e-13)), "psi_w");
}

Sides modular1_sides(double t, double w) {
  const cdouble lhs = phi_w({t, w});
  const double pre = std::exp(-kPi * t * t / (4.0 * w)) / std::sqrt(w);
  const cdouble rhs = pre * psi_w({kI * t / w, 1.0 / w});
  return {lhs.real(), rhs.real(), lhs.imag(), rhs.imag()};
}

Sides modular1_phi_sides(double t, double w) {
  const cdouble lhs = phi_w({t, w});
  const double pre = std::exp(-kPi * t * t / (4.0 * w)) / std::sqrt(w);
  const cdouble rhs = pre * phi_w({kI * t / w, 1.0 / w});
  return {lhs.real(), rhs.real(), lhs.imag(), rhs.imag()};
}

Sides modular2_sides(double t, double w) {
  const cdouble lhs = std::exp(kPi * t * t / (4.0 * w)) * (0.5 + psi_w({t, w}));
  const cdouble rhs = std::exp(kPi * (t + w) * (t + w) / (4.0 * w)) * phi_w({t + w, w});
  return {lhs.real(), rhs.real(), lhs.imag(), rhs.imag()};
}

namespace {

// sin(2 pi t x)/sinh(pi x), with limit 2t at x = 0
double sine_ratio(double t, double x) {
  if (x == 0.0) return 2.0 * t;
  if (x < 20.0) return std::sin(2.0 * kPi * t * x) / std::sinh(kPi * x);
  const double e = std::exp(-kPi * x);
  return std::sin(2.0 * kPi * t * x) * 2.0 * e / (1.0 - e * e);
}

double mustafy_lhs(double t, bool cosine) {
  if (!(t > 0.0)) throw DomainError("mustafy: need t > 0");
  auto f = [t, cosine](double x) {
    const double ph = kPi * x * x;
    return sine_ratio(t, x) * (cosine ? std::cos(ph) : std::sin(ph));
  };
  auto zeros = [t](std::size_t k) { return static_cast<double>(k) / (2.0 * t); };
  quad::OscillatoryOptions opts;
  opts.max_panels = 2000;
  return require<double>(
      quad::integrate_oscillatory(f, zeros, Tolerance(1e-13, 1e-12), opts), "mustafy");
}

}  // namespace

Sides mustafy_cos_sides(double t) {
  const double rhs = (std::cosh(kPi * t) - std::cos(kPi * t * t)) / (2.0 * std::sinh(kPi * t));
  return {mustafy_lhs(t, true), rhs};
}

Sides mustafy_sin_sides(double t) {
  return {mustafy_lhs(t, false), std::sin(kPi * t * t) / (2.0 * std::sinh(kPi * t))};
}

ResidualPair mustafy_pair_residual(double t) {
  return {mustafy_cos_sides(t).residual(), mustafy_sin_sides(t).residual()};
}

namespace {

void check_quad(const GammaQuadParams& p) {
  if (std::abs(p.alpha + p.beta + p.gamma + p.delta - 4.0) > 1e-14) {
    throw DomainError("gamma_quad: need alpha + beta + gamma + delta = 4");
  }
}

double gamma_quad_integrand(const GammaQuadParams& p, double x) {
  const sf::SignedLog a = sf::log_recip_gamma(p.alpha + x);
  const sf::SignedLog b = sf::log_recip_gamma(p.beta - x);
  const sf::SignedLog c = sf::log_recip_gamma(p.gamma + 2.0 * x);
  const sf::SignedLog d = sf::log_recip_gamma(p.delta - 2.0 * x);
  const int sign = a.sign * b.sign * c.sign * d.sign;
  if (sign == 0) return 0.0;
  const double mag = std::exp(a.log_abs + b.log_abs + c.log_abs + d.log_abs);
  // cos(pi(x + beta + gamma)) with the argument reduced mod 2
  const double arg = std::remainder(x + p.beta + p.gamma, 2.0);
  return sign * mag * std::cos(kPi * arg);
}

}  // namespace

QuadResult gamma_quad_integral(const GammaQuadParams& p) {
  check_quad(p);
  // The integrand has period-1 trigonometric factors over an algebraic
  // envelope with a non-oscillating x^{-2} component, so unit panels of
  // f(x) + f(-x) are accelerated with the Levin transform.
  auto g = [p](double x) { return gamma_quad_integrand(p, x) + gamma_quad_integrand(p, -x); };
  auto zeros = [](std::size_t k) { return static_cast<double>(k); };
  quad::OscillatoryOptions opts;
  opts.acceleration = quad::Acceleration::kLevin;
  opts.min_panels = 12;
  opts.max_panels = 400;
  return quad::integrate_oscillatory(g, zeros, Tolerance(1e-10, 1e-10), opts);
}

double gamma_quad_rhs(const GammaQuadParams& p) {
  check_quad(p);
  return 0.5 * sf::recip_gamma(p.gamma + p.delta - 1.0) *
         sf::recip_gamma(2.0 * p.alpha + p.delta - 2.0) *
         sf::recip_gamma(2.0 * p.beta + p.gamma - 2.0);
}

QuadResult bessel_product_integral(double alpha, double beta, double x, double y) {
  if (!(alpha >= 1.0 && beta >= 1.0)) throw DomainError("bessel_product: need alpha, beta >= 1");
  if (!(x > 0.0 && x <= 2.0 && y > 0.0 && y <= 2.0)) {
    throw DomainError("bessel_product: need x, y in (0, 2]");
  }
  auto f = [=](double w) {
    return sf::bessel_j_scaled(alpha + w, x) * sf::bessel_j_scaled(beta - w, y);
  };
  // sign changes sit next to the poles of 1/Gamma in the decaying factor:
  // w ~ beta + k on the right, w ~ -alpha - k on the left
  auto right = [beta](std::size_t k) { return beta + static_cast<double>(k); };
  auto left = [alpha](std::size_t k) { return alpha + static_cast<double>(k); };
  quad::OscillatoryOptions opts;
  opts.acceleration = quad::Acceleration::kAitken;
  opts.min_panels = 12;
  opts.max_panels = 200;
  return quad::integrate_line(f, right, left, Tolerance(1e-14, 1e-11), opts);
}

double bessel_product_rhs(double alpha, double beta, double x, double y) {
  const double nu = alpha + beta;
  const double r = std::sqrt(2.0 * x * x + 2.0 * y * y);
  return sf::bessel_j(nu, r) / std::pow(0.5 * (x * x + y * y), 0.5 * nu);
}

namespace {

// |G((s-1+it)/4)|^2-type weight times the Xi product, evaluated as written
cdouble gamma_pair(double s, double t) {
  const cdouble a1(0.25 * (s - 1.0), 0.25 * t);
  const cdouble a2(0.25 * (s - 1.0), -0.25 * t);
  return std::exp(sf::ln_gamma(a1) + sf::ln_gamma(a2));
}

// smallest multiple of 5 beyond which |w(t)| stays below 1e-17 |w(0)|
template <class W>
double truncation_point(const W& w) {
  const double w0 = std::abs(w(0.0));
  double t = 5.0;
  while (t < 200.0 && std::abs(w(t)) > 1e-17 * w0) t += 5.0;
  return t;
}

double integrate_to(const std::function<double(double)>& f, double upper, double step,
                    Tolerance tol, const char* who) {
  double total = 0.0;
  for (double a = 0.0; a < upper; a += step) {
    total += require<double>(quad::integrate_finite(f, a, std::min(a + step, upper), tol), who);
  }
  return total;
}

}  // namespace

double eq13_lhs(double n) {
  const double scale = std::exp(-4.0 * n);
  auto f = [scale](double x) {
    const double w = x == 0.0 ? 1.0 / (2.0 * kPi) : x / std::expm1(2.0 * kPi * x);
    return w * std::exp(-kPi * x * x * scale);
  };
  const double inner =
      require<double>(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-16, 1e-14)), "eq13_lhs");
  return std::exp(-n) - 4.0 * kPi * std::exp(-3.0 * n) * inner;
}

double eq13_rhs(double n) {
  auto weight = [](double t) { return (gamma_pair(0.0, t) * sf::xi_big(0.5 * t)).real(); };
  const double upper = truncation_point(weight);
  auto f = [&weight, n](double t) { return weight(t) * std::cos(n * t); };
  return integrate_to(f, upper, 5.0, Tolerance(1e-15, 1e-12), "eq13_rhs") /
         (4.0 * kPi * std::sqrt(kPi));
}

double riemann_eq13_residual(double n) { return eq13_lhs(n) - eq13_rhs(n); }

double eq12_lhs(double t) {
  // The double-exponential outer rule evaluates every node once across its
  // refinement levels, so each inner integral is computed exactly once.
  auto f = [t](double z) { return eq13_lhs(z) * std::cos(t * z); };
  return require<double>(quad::integrate_semi_infinite(f, 0.0, Tolerance(1e-13, 1e-11)),
                         "eq12_lhs");
}

double eq12_rhs(double t) {
  return (gamma_pair(0.0, t) * sf::xi_big(0.5 * t)).real() / (8.0 * std::sqrt(kPi));
}

double riemann_eq12_residual(double t) { return eq12_lhs(t) - eq12_rhs(t); }

double f_ns_t_side(double n, double s) {
  auto weight = [s](double t) {
    const cdouble xi_plus = sf::xi_big(cdouble(0.5 * t, 0.5 * s));
    const cdouble xi_minus = sf::xi_big(cdouble(0.5 * t, -0.5 * s));
    return (gamma_pair(s, t) * xi_plus * xi_minus).real() / ((s + 1.0) * (s + 1.0) + t * t);
  };
  const double upper = truncation_point(weight);
  auto f = [&weight, n](double t) { return weight(t) * std::cos(n * t); };
  return integrate_to(f, upper, 5.0, Tolerance(1e-15, 1e-12), "f_ns_t_side");
}

namespace {

// 1/(e^y - 1) - 1/y, y > 0
double bernoulli_gap(double y) {
  if (y < 0.1) {
    const double y2 = y * y;
    return -0.5 + y * (1.0 / 12.0 + y2 * (-1.0 / 720.0 + y2 * (1.0 / 30240.0 +
                                                            y2 * (-1.0 / 1209600.0 + y2 / 47900160.0))));
  }
  if (y > 700.0) return -1.0 / y;
  return 1.0 / std::expm1(y) - 1.0 / y;
}

}  // namespace

double f_ns_x_side(double n, double s) {
  if (!(s > -1.0 && s < 1.0)) throw DomainError("f_ns_x_side: x-integral needs -1 < s < 1");
  const double ep = std::exp(n);
  const double em = std::exp(-n);
  auto f = [=](double x) { return std::pow(x, s) * bernoulli_gap(x * ep) * bernoulli_gap(x * em); };
  const Tolerance tol(1e-15, 1e-12);
  const QuadResult r =
      quad::integrate_singular(f, 0.0, 1.0, tol) + quad::integrate_semi_infinite(f, 1.0, tol);
  return std::pow(4.0 * kPi, -(s - 3.0) / 2.0) / 8.0 * require<double>(r, "f_ns_x_side");
}

double f_ns_residual(double n, double s) { return f_ns_t_side(n, s) - f_ns_x_side(n, s); }

}  // namespace rverify::analytic
