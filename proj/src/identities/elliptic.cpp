#include "rverify/identities/elliptic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "rverify/errors.hpp"
#include "rverify/quadrature.hpp"
#include "rverify/specfun.hpp"

namespace rverify::elliptic {

using quad::QuadResult;
using quad::Tolerance;

namespace {

constexpr double kPi = std::numbers::pi;
const Tolerance kTight(1e-15, 1e-13);

double require(const QuadResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": did not converge");
  return r.real();
}

void check_open_unit(double x, const char* who) {
  if (!(std::abs(x) < 1.0)) throw DomainError(std::string(who) + ": need |x| < 1");
}

double sum_to_convergence(const std::function<double(std::size_t)>& term, const char* who,
                          quad::SeriesOptions opts = {}) {
  return require(
      quad::sum_series([&term](std::size_t n) { return quad::cdouble(term(n)); },
                       Tolerance(1e-15, 1e-13), opts),
      who);
}

}  // namespace

const char* to_string(RadicalVariant v) {
  return v == RadicalVariant::kX ? "sqrt(1-x sin^2 gamma)" : "sqrt(1-x^2 sin^2 gamma)";
}

AdditionResult addition_check(double alpha, double beta, double x, RadicalVariant variant) {
  if (!(alpha > 0.0 && alpha < kPi / 2 && beta > 0.0 && beta < kPi / 2)) {
    throw DomainError("addition_check: need alpha, beta in (0, pi/2)");
  }
  if (!(x > 0.0 && x < 1.0)) throw DomainError("addition_check: need 0 < x < 1");
  const double big_x = variant == RadicalVariant::kX ? x : x * x;
  const double sa = std::sin(alpha);
  const double sb = std::sin(beta);
  // the condition multiplied through by sin a sin b > 0
  auto h = [=](double g) {
    const double s = std::sin(g);
    return std::cos(g) - std::cos(alpha) * std::cos(beta) + sa * sb * std::sqrt(1.0 - big_x * s * s);
  };
  constexpr int kSamples = 512;
  double lo = 0.0;
  double h_lo = h(lo);
  for (int i = 1; i <= kSamples; ++i) {
    const double hi = kPi * i / kSamples;
    const double h_hi = h(hi);
    if (h_lo == 0.0 && lo > 0.0) break;
    if (h_lo * h_hi < 0.0 || h_hi == 0.0) {
      const double g = quad::find_root(h, lo, hi);
      const double m = x * x;
      const double residual =
          sf::elliptic_f(alpha, m) + sf::elliptic_f(beta, m) - sf::elliptic_f(g, m);
      return {g, residual};
    }
    lo = hi;
    h_lo = h_hi;
  }
  throw UnsupportedRange("condition infeasible at these parameters");
}

double entry_arccos_residual(double x) {
  check_open_unit(x, "entry_arccos");
  auto left = [x](double p) { return 1.0 / std::sqrt(1.0 + x * std::sin(p)); };
  auto right = [x](double p) {
    const double s2 = std::sin(p) * std::sin(p);
    return std::acos(x * s2) / std::sqrt(1.0 - x * x * s2 * s2);
  };
  const double lhs = 0.5 * kPi * require(quad::integrate_finite(left, 0.0, kPi / 2, kTight), "entry_arccos");
  const double rhs = require(quad::integrate_finite(right, 0.0, kPi / 2, kTight), "entry_arccos");
  return lhs - rhs;
}

double entry_double_integral_lhs(double x) {
  check_open_unit(x, "entry_double_integral");
  if (x == 0.0) return 0.0;
  const Tolerance outer(1e-13, 1e-12);
  const Tolerance inner = outer.scaled(0.1);
  auto f = [x, inner](double phi) {
    const double sp = std::sin(phi);
    auto g = [x, sp](double theta) {
      const double st = std::sin(theta);
      return 1.0 / std::sqrt(1.0 - x * x * st * st * sp * sp);
    };
    const double in = require(quad::integrate_finite(g, 0.0, kPi / 2, inner), "entry_double_integral");
    return x * sp / std::sqrt(1.0 - x * x * sp * sp) * in;
  };
  return require(quad::integrate_finite(f, 0.0, kPi / 2, outer), "entry_double_integral");
}

double entry_double_integral_rhs(double x) {
  check_open_unit(x, "entry_double_integral");
  const double kp = sf::elliptic_k(0.5 * (1.0 + x));
  const double km = sf::elliptic_k(0.5 * (1.0 - x));
  return 0.5 * (kp * kp - km * km);
}

double entry_double_integral_residual(double x) {
  return entry_double_integral_lhs(x) - entry_double_integral_rhs(x);
}

double page172_beta(double x, double alpha) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("page172: need 0 < x < 1");
  if (!(alpha >= 0.0 && alpha < kPi / 2)) throw DomainError("page172: need 0 <= alpha < pi/2");
  const double sa = std::sin(alpha);
  const double r = (1.0 + x * sa) / (1.0 - x * sa);
  const double big_r = (1.0 + sa) / (1.0 - sa) * r * r;
  if (!(big_r > 0.0) || !std::isfinite(big_r)) throw DomainError("page172: ratio not positive");
  const double beta = std::asin((big_r - 1.0) / (big_r + 1.0));
  if (beta > kPi / 2) throw UnsupportedRange("out of range");
  return beta;
}

double entry_page172_residual(double x, double alpha) {
  const double beta = page172_beta(x, alpha);
  const double c = (2.0 + x) / (1.0 + 2.0 * x);
  const double lhs = (1.0 + 2.0 * x) * sf::elliptic_f(alpha, x * x * x * c);
  const double rhs = sf::elliptic_f(beta, x * c * c * c);
  return lhs - rhs;
}

double quartic_G(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("quartic_G: need 0 <= v <= 1");
  if (v == 0.0) return 0.0;
  auto f = [](double t) { return 1.0 / std::sqrt(1.0 + t * t * t * t); };
  return require(quad::integrate_finite(f, 0.0, v, kTight), "quartic_G");
}

double quartic_mu() { return 4.0 * quartic_G(1.0) / kPi; }

InversionState quartic_state(double v) {
  const double mu = quartic_mu();
  return {v, 2.0 * quartic_G(v) / mu, mu};
}

double quartic_inversion_residual(double v) {
  if (!(v > 0.0 && v <= 1.0)) throw DomainError("quartic_inversion: need 0 < v <= 1");
  const InversionState s = quartic_state(v);
  const double series = sum_to_convergence(
      [th = s.theta](std::size_t n) {
        const double dn = static_cast<double>(n);
        return std::sin(2.0 * dn * th) / (dn * std::cosh(dn * kPi));
      },
      "quartic_inversion");
  return 2.0 * std::atan(v) - s.theta - series;
}

double lemniscate_F(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("lemniscate_F: need 0 <= v <= 1");
  if (v == 0.0) return 0.0;
  // 1 - t^4 = (1 - t)(1 + t)(1 + t^2); near the right end 1 - t = (1 - v) - offset
  auto f = [v](double t, double off) {
    const double one_minus = off < 0.0 ? (1.0 - v) - off : 1.0 - t;
    return 1.0 / std::sqrt(one_minus * (1.0 + t) * (1.0 + t * t));
  };
  return require(quad::integrate_singular(f, 0.0, v, kTight), "lemniscate_F");
}

double lemniscate_F_series(double v) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError("lemniscate_F_series: need 0 <= v <= 1");
  const double v4 = v * v * v * v;
  // (1/2)_n/n! = Gamma(n + 1/2)/(Gamma(1/2) n!)
  auto term = [v, v4](std::size_t n) {
    const double dn = static_cast<double>(n);
    const double ratio = std::exp(std::lgamma(dn + 0.5) - std::lgamma(dn + 1.0)) / std::sqrt(kPi);
    return ratio * v * std::pow(v4, dn) / (4.0 * dn + 1.0);
  };
  quad::SeriesOptions opts;
  opts.start = 0;
  // at v = 1 the terms fall like n^{-3/2}, so the remainder goes like N^{-1/2}
  if (v == 1.0) opts.algebraic_tail_exponent = 0.5;
  return sum_to_convergence(term, "lemniscate_F_series", opts);
}

double lemniscate_mu() { return 2.0 * std::numbers::sqrt2 * lemniscate_F(1.0) / kPi; }

InversionState lemniscate_state(double v) {
  const double mu = lemniscate_mu();
  return {v, std::numbers::sqrt2 * lemniscate_F(v) / mu, mu};
}

double lemniscate_inversion_lhs(double v) {
  if (!(v > 0.0 && v <= 1.0)) throw DomainError("lemniscate_inversion: need 0 < v <= 1");
  const double v4 = v * v * v * v;
  // (1/4)_n/(3/4)_n = Gamma(n + 1/4) Gamma(3/4)/(Gamma(1/4) Gamma(n + 3/4))
  const double norm = std::lgamma(0.75) - std::lgamma(0.25);
  auto term = [v4, norm](std::size_t n) {
    const double dn = static_cast<double>(n);
    const double ratio = std::exp(norm + std::lgamma(dn + 0.25) - std::lgamma(dn + 0.75));
    return ratio * std::pow(v4, dn) / (4.0 * dn);
  };
  quad::SeriesOptions opts;
  if (v == 1.0) opts.algebraic_tail_exponent = 0.5;
  const double series = sum_to_convergence(term, "lemniscate_inversion", opts);
  return std::log(v) + kPi / 6.0 - 0.5 * std::numbers::ln2 + series;
}

double lemniscate_inversion_rhs(double v) {
  const InversionState s = lemniscate_state(v);
  const double series = sum_to_convergence(
      [th = s.theta](std::size_t n) {
        const double dn = static_cast<double>(n);
        return std::cos(2.0 * dn * th) / (dn * std::expm1(2.0 * kPi * dn));
      },
      "lemniscate_inversion");
  return std::log(std::sin(s.theta)) + s.theta * s.theta / (2.0 * kPi) - 2.0 * series;
}

double lemniscate_inversion_residual(double v) {
  return lemniscate_inversion_lhs(v) - lemniscate_inversion_rhs(v);
}

double lemniscate_doubling_residual(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("lemniscate_doubling: need 0 < x <= 1");
  const double x2 = x * x;
  // 1 - v^2 = (1 - x^2)^2/(1 + x^4), so v rounds to exactly 1 only at x = 1
  const double v = x == 1.0 ? 1.0 : std::min(1.0, std::numbers::sqrt2 * x / std::sqrt(1.0 + x2 * x2));
  return lemniscate_F(v) - std::numbers::sqrt2 * quartic_G(x);
}

}  // namespace rverify::elliptic
