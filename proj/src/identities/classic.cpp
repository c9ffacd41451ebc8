#include "rverify/identities/classic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "rverify/errors.hpp"
#include "rverify/quadrature.hpp"

namespace rverify::classic {

using quad::QuadResult;
using quad::Tolerance;

namespace {

constexpr double kPi = std::numbers::pi;
const Tolerance kTight(1e-15, 1e-13);

double require(const QuadResult& r, const char* who) {
  if (!r.converged) throw ConvergenceError(std::string(who) + ": quadrature not converged");
  return r.real();
}

// log(1 + d)/d with its limit 1 at d = 0.
double log1p_over(double d) { return d == 0.0 ? 1.0 : std::log1p(d) / d; }

}  // namespace

double q783_upper_limit(double n) {
  if (!(n > 0.0)) throw DomainError("q783_upper_limit: need n > 0");
  // log form of u^{n-1}(u - 1) - 1; increasing in u for n > 0
  auto g = [n](double u) { return (n - 1.0) * std::log(u) + std::log(u - 1.0); };
  double hi = 1.0 + std::pow(2.0, 1.0 / std::min(n, 1.0));
  for (int i = 0; g(hi) < 0.0; ++i) {
    if (i > 200) throw DomainError("q783_upper_limit: bracket failed");
    hi = 1.0 + 2.0 * (hi - 1.0);
  }
  return quad::find_root(g, 1.0 + 1e-300, hi);
}

double q783_phi(double n) {
  if (!(n >= 0.0)) throw DomainError("q783_phi: need n >= 0");
  if (n == 0.0) {
    // v = 1 - 1/u on u in [1, inf): integrand log u / (u (u - 1))
    auto f = [](double u, double off) {
      const double d = off > 0.0 ? off : u - 1.0;
      return log1p_over(d) / u;
    };
    return require(quad::integrate_semi_infinite(f, 1.0, kTight), "q783_phi");
  }
  // dv/v = (n u - n + 1) / (u (u - 1)) du
  auto f = [n](double u) { return log1p_over(u - 1.0) * (n * u - n + 1.0) / u; };
  return require(quad::integrate_finite(f, 1.0, q783_upper_limit(n), kTight), "q783_phi");
}

double q783_functional_residual(double n) {
  return q783_phi(n) + q783_phi(1.0 / n) - kPi * kPi / 6.0;
}

GrowthFunction g_linear() {
  return {[](double t) { return std::log1p(t); }, [](double t) { return 1.0 / (1.0 + t); }};
}

GrowthFunction g_quadratic() {
  return {[](double t) { return std::log1p(t + t * t); },
          [](double t) { return (1.0 + 2.0 * t) / (1.0 + t + t * t); }};
}

GrowthFunction g_cosh() {
  return {[](double t) {
            const double a = std::abs(t);
            if (a < 1.0) {
              const double s = std::sinh(0.5 * a);
              return std::log1p(2.0 * s * s);
            }
            return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
          },
          [](double t) { return std::tanh(t); }};
}

namespace {

// log g(t) d(log v)/dt on (0, t*], where v(t*) = 1.
struct LogIntegrand {
  double t_star;
  std::function<double(double)> f;
};

LogIntegrand berndt_evans_integrand(const GrowthFunction& g, double n) {
  if (!(n > 0.0)) throw DomainError("berndt_evans_phi: need n > 0");
  auto log_v = [g, n](double t) { return n * g.log_g(t) - g.log_g(1.0 / t); };
  auto dlog_v = [g, n](double t) { return n * g.dlog_g(t) + g.dlog_g(1.0 / t) / t / t; };
  double lo = 1.0;
  double hi = 1.0;
  for (int i = 0; log_v(hi) < 0.0; ++i) {
    if (i > 100) throw DomainError("berndt_evans_phi: v never reaches 1");
    hi *= 2.0;
  }
  for (int i = 0; log_v(lo) > 0.0; ++i) {
    if (i > 100) throw DomainError("berndt_evans_phi: v never drops below 1");
    lo *= 0.5;
  }
  const double t_star = log_v(hi) == 0.0 ? hi : quad::find_root(log_v, lo, hi);
  for (int k = 1; k < 64; ++k) {
    if (!(dlog_v(t_star * k / 64.0) > 0.0)) {
      throw DomainError("berndt_evans_phi: v is not increasing");
    }
  }
  return {t_star, [g, dlog_v](double t) { return g.log_g(t) * dlog_v(t); }};
}

}  // namespace

double berndt_evans_phi(const GrowthFunction& g, double n) {
  const LogIntegrand li = berndt_evans_integrand(g, n);
  return require(quad::integrate_singular(li.f, 0.0, li.t_star, kTight), "berndt_evans_phi");
}

// The part of the integrand coming from g(1/t) does not depend on n and
// cancels in the combination, so the three integrands are summed on the
// common segment (0, a]. This keeps the residual finite when each phi
// diverges at t = 0 (g = e^t, for instance).
double berndt_evans_residual(const GrowthFunction& g, double n) {
  const LogIntegrand p = berndt_evans_integrand(g, n);
  const LogIntegrand r = berndt_evans_integrand(g, 1.0 / n);
  const LogIntegrand one = berndt_evans_integrand(g, 1.0);
  const double a = std::min({p.t_star, r.t_star, one.t_star});
  auto combined = [&](double t) { return p.f(t) + r.f(t) - 2.0 * one.f(t); };
  double total = require(quad::integrate_singular(combined, 0.0, a, kTight), "berndt_evans_residual");
  auto tail = [a](const LogIntegrand& li) {
    return li.t_star > a ? require(quad::integrate_finite(li.f, a, li.t_star, kTight), "berndt_evans_residual")
                         : 0.0;
  };
  total += tail(p) + tail(r) - 2.0 * tail(one);
  return total;
}

double q295_side(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("q295_side: need alpha > 0");
  auto f = [alpha](double x) { return std::exp(-x * x) / std::cosh(alpha * x); };
  return std::sqrt(alpha) * require(quad::integrate_semi_infinite(f, 0.0, kTight), "q295_side");
}

namespace {

// 2 int_0^ymax y trig(n y^2) / (e^{2 pi y} - 1) dy, split at the zeros of the
// trig factor so each panel holds at most a half wave.
double ram_transform(double n, bool sine) {
  if (!(n >= 0.0)) throw DomainError("ram_phi: need n >= 0");
  // ymax: e^{-2 pi y}(1 + n y^2) < 1e-18
  double ymax = 7.0;
  for (int i = 0; i < 50; ++i) ymax = (18.0 * std::numbers::ln10 + std::log1p(n * ymax * ymax)) / (2.0 * kPi);
  auto f = [n, sine](double y) {
    const double w = y == 0.0 ? 1.0 / (2.0 * kPi) : y / std::expm1(2.0 * kPi * y);
    const double phase = n * y * y;
    return w * (sine ? std::sin(phase) : std::cos(phase));
  };
  std::vector<double> cuts = {0.0};
  if (n > 0.0) {
    const double offset = sine ? 0.0 : 0.5;
    for (int k = 0;; ++k) {
      const double y = std::sqrt((k + offset) * kPi / n);
      if (y >= ymax) break;
      if (y > 0.0) cuts.push_back(y);
    }
  }
  cuts.push_back(ymax);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += require(quad::integrate_finite(f, cuts[i], cuts[i + 1], Tolerance(1e-17, 1e-13)),
                     "ram_phi");
  }
  return 2.0 * total;
}

}  // namespace

double ram_phi(double n) { return ram_transform(n, false); }
double ram_sine(double n) { return ram_transform(n, true); }

Sides ram_sine_sides(double n) {
  if (!(n > 0.0)) throw DomainError("ram_sine: need n > 0");
  const double rhs = ram_phi(n) - 0.5 / n +
                     ram_phi(kPi * kPi / n) * std::sqrt(2.0 * kPi * kPi * kPi / (n * n * n));
  return {ram_sine(n), rhs};
}

double ram_sine_transform(double n) { return ram_sine_sides(n).residual(); }

double ram_phi_gauss(int a, int b) {
  if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0) {
    throw DomainError("ram_phi_gauss: a and b must be odd positive integers");
  }
  // r^2 a / b reduced mod 2b keeps the trig arguments small
  double first = 0.0;
  for (long r = 1; r <= b; ++r) {
    const long num = (r * r * a) % (2L * b);
    first += (b - 2.0 * r) * std::cos(kPi * num / b);
  }
  double second = 0.0;
  for (long r = 1; r <= a; ++r) {
    const long num = (r * r * b) % (2L * a);
    second += (a - 2.0 * r) * std::sin(0.25 * kPi + kPi * num / a);
  }
  const double ratio = static_cast<double>(b) / a;
  return 0.25 * first - 0.25 * ratio * std::sqrt(ratio) * second;
}

}  // namespace rverify::classic
